#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "modfib/arith.hpp"
#include "modfib/catalog.hpp"
#include "modfib/degrees.hpp"
#include "modfib/errors.hpp"
#include "modfib/modular_invariants.hpp"
#include "oracles.hpp"
#include "random_groups.hpp"

using namespace modfib;

namespace {

const std::string kData = MODFIB_TEST_DATA;

std::vector<std::uint64_t> v(std::initializer_list<std::uint64_t> x) { return x; }

const PipelineDecision& decision(const std::vector<PipelineDecision>& ds, const std::string& label) {
  for (const auto& d : ds)
    if (d.entry.label == label) return d;
  throw std::runtime_error("no decision for " + label);
}

bool has_annotation(const PipelineDecision& d, const std::string& prefix) {
  return std::any_of(d.annotations.begin(), d.annotations.end(),
                     [&](const std::string& a) { return a.rfind(prefix, 0) == 0; });
}

}  // namespace

TEST(SubgroupFile, Load) {
  const SubgroupSpec s = parse_subgroup(R"({"modulus": 56, "generators": [[1,28,41,55],[49,22,41,27],[20,21,1,1],[0,19,23,16]]})");
  EXPECT_EQ(Subgroup::enumerate(s).index(), 112u);
  EXPECT_EQ(Subgroup::enumerate(parse_subgroup(R"({"modulus": 5, "generators": [[1,0,0,1]]})")).order(), 1u);
  EXPECT_THROW(parse_subgroup(R"({"modulus": 4, "generators": [[2,0,0,1]]})"), NonInvertible);
  EXPECT_THROW(parse_subgroup(R"({"modulus": 4, "generators": [[1,0,0]]})"), ParseError);
  EXPECT_THROW(parse_subgroup(R"({"generators": []})"), ParseError);
  EXPECT_THROW(parse_subgroup("not json"), ParseError);
  const SubgroupSpec neg = parse_subgroup(R"({"modulus": 7, "generators": [[-1, 0, 0, -1]], "extra": 1})");
  EXPECT_EQ(neg.generators.front(), Mat2(7, 6, 0, 0, 6));
}

TEST(SubgroupFile, RoundTrip) {
  testing_support::Rng rng(601);
  for (int i = 0; i < 100; ++i) {
    SubgroupSpec s = testing_support::random_subgroup(rng, 1 + static_cast<std::uint32_t>(rng() % 100));
    if (i % 3 == 0) s.label = "x." + std::to_string(i);
    const SubgroupSpec back = parse_subgroup(serialize_subgroup(s));
    EXPECT_EQ(back.modulus, s.modulus);
    EXPECT_EQ(back.generators, s.generators);
    EXPECT_EQ(back.label, s.label);
  }
}

TEST(Builtin, Lookups) {
  const CatalogEntry e = builtin("7.56.1.b.1");
  EXPECT_EQ(e.level, 7u);
  ASSERT_TRUE(e.orbit_multiset_x0 && e.orbit_multiset_x1);
  EXPECT_EQ(*e.orbit_multiset_x0, v({2, 3, 3}));
  EXPECT_EQ(*e.orbit_multiset_x1, v({6, 9, 9}));
  EXPECT_TRUE(e.conditional);
  EXPECT_EQ(builtin(JInvariant::parse("-24729001")).label, "11.12.1.a.1");
  EXPECT_THROW(builtin(JInvariant::parse("5")), NotFound);
  EXPECT_THROW(builtin("99.1.0.a.1"), NotFound);
  EXPECT_EQ(*builtin("1.1.0.a.1").orbit_multiset_x0, v({1}));
  ASSERT_NE(exceptional_row_for(JInvariant::parse("2268945/128")), nullptr);
  EXPECT_EQ(exceptional_row_for(JInvariant::parse("5")), nullptr);
}

TEST(EmbeddedTables, SumsAndCmDisjointness) {
  EXPECT_EQ(cm_j_strings().size(), 13u);
  for (const auto& row : infinite_b0_closures()) {
    std::uint64_t s = 0;
    for (auto x : row.orbits) s += x;
    EXPECT_EQ(s, oracle::count_projective_line(row.level)) << row.label;
    EXPECT_EQ(parse_label(row.label).level, row.level);
  }
  EXPECT_EQ(infinite_b0_closures().size(), 44u);
  for (Curve c : {Curve::X0, Curve::X1})
    for (const auto& row : finite_closures(c)) {
      std::uint64_t s = 0;
      for (auto x : row.orbits) s += x;
      const std::uint64_t total = c == Curve::X0 ? oracle::count_projective_line(row.level)
                                                 : oracle::count_primitive_vectors_mod_sign(row.level);
      EXPECT_EQ(s, total) << row.label;
      for (const auto& j : row.j_invariants) EXPECT_FALSE(is_cm(JInvariant::parse(j))) << row.label << " " << j;
    }
}

TEST(Ingest, EmptyAndMissing) {
  const IngestResult r = ingest_catalog(kData + "/empty_catalog");
  EXPECT_TRUE(r.entries.empty());
  EXPECT_TRUE(r.errors.empty());
  EXPECT_THROW(ingest_catalog(kData + "/no_such_directory"), MissingCatalog);
}

TEST(Ingest, ExceptionalRows) {
  const IngestResult r = ingest_catalog(kData + "/ingest_exceptional");
  EXPECT_TRUE(r.errors.empty());
  ASSERT_EQ(r.entries.size(), 5u);
  std::multiset<std::string> prefixes;
  for (const auto& e : r.entries) prefixes.insert(parse_label(e.label).prefix());
  EXPECT_EQ(prefixes, (std::multiset<std::string>{"12.64.1", "12.64.1", "56.112.5", "252.432.28", "252.432.28"}));
}

TEST(Ingest, AggregatesErrors) {
  const IngestResult r = ingest_catalog(kData + "/bad_catalog");
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries.front().label, "7.8.0.x.1");
  ASSERT_EQ(r.errors.size(), 3u);
  const std::string all = r.errors[0] + r.errors[1] + r.errors[2];
  EXPECT_NE(all.find("11.12.2.x.1"), std::string::npos);
  EXPECT_NE(all.find("malformed.json"), std::string::npos);
  EXPECT_NE(all.find("noninvertible.json"), std::string::npos);
}

TEST(Ingest, TableOneFixturesMatchEmbeddedRows) {
  const IngestResult r = ingest_catalog(kData + "/table1");
  EXPECT_TRUE(r.errors.empty());
  ASSERT_GE(r.entries.size(), 20u);
  for (const auto& e : r.entries) {
    ASSERT_TRUE(e.generators.has_value());
    const CatalogEntry row = builtin(e.label);
    ASSERT_TRUE(row.orbit_multiset_x0.has_value());
    EXPECT_EQ(fiber_degrees(Curve::X0, e.level, *e.generators).values, *row.orbit_multiset_x0) << e.label;
  }
}

TEST(Pipeline, Conditions) {
  const IngestResult r = ingest_catalog(kData + "/pipeline");
  ASSERT_TRUE(r.errors.empty());
  const auto ds = pipeline_filter(r.entries);
  EXPECT_EQ(decision(ds, "3.2.0.x.1").failed_condition, 1);
  EXPECT_EQ(decision(ds, "8.8.0.x.1").failed_condition, 2);
  EXPECT_EQ(decision(ds, "6.48.0.x.1").failed_condition, 3);
  EXPECT_EQ(decision(ds, "5.6.0.x.1").failed_condition, 4);
  EXPECT_EQ(decision(ds, "11.12.1.x.1").failed_condition, 5);
  EXPECT_EQ(decision(ds, "22.36.2.x.1").failed_condition, 1);
  EXPECT_EQ(decision(ds, "23.24.2.x.1").failed_condition, 1);
  EXPECT_TRUE(decision(ds, "7.8.0.x.1").passed);
  const auto& unknown_rank = decision(ds, "14.24.1.x.1");
  EXPECT_TRUE(unknown_rank.passed);
  EXPECT_TRUE(has_annotation(unknown_rank, "flag-unknown"));
  const auto& no_gens = decision(ds, "9.12.0.a.1");
  EXPECT_TRUE(no_gens.passed);
  EXPECT_TRUE(has_annotation(no_gens, "flag-unknown"));
}

TEST(Pipeline, LevelWitnessIndependentlyChecked) {
  // The level-8 fixture contains the kernel of SL2(Z/8) -> SL2(Z/4) but not
  // of GL2(Z/8) -> GL2(Z/4), by brute force.
  const SubgroupSpec s = load_subgroup(kData + "/pipeline/level8_sl4.json");
  std::vector<oracle::M> gens;
  for (const Mat2& g : s.generators) gens.push_back({g.a(), g.b(), g.c(), g.d()});
  const auto group = oracle::generate(gens, 8);
  bool sl_kernel_in = true, gl_kernel_in = true, sl2_kernel_in = true;
  for (const auto& m : oracle::all_invertible(8)) {
    const bool k4 = m[0] % 4 == 1 && m[1] % 4 == 0 && m[2] % 4 == 0 && m[3] % 4 == 1;
    const bool k2 = m[0] % 2 == 1 && m[1] % 2 == 0 && m[2] % 2 == 0 && m[3] % 2 == 1;
    const bool in = group.count(m) > 0;
    if (k4 && !in) gl_kernel_in = false;
    if (k4 && oracle::det(m, 8) == 1 && !in) sl_kernel_in = false;
    if (k2 && oracle::det(m, 8) == 1 && !in) sl2_kernel_in = false;
  }
  EXPECT_TRUE(sl_kernel_in);
  EXPECT_FALSE(sl2_kernel_in);
  EXPECT_FALSE(gl_kernel_in);
}

TEST(Pipeline, TableOneFixturesPass) {
  const IngestResult r = ingest_catalog(kData + "/table1");
  for (const auto& d : pipeline_filter(r.entries)) EXPECT_TRUE(d.passed) << d.entry.label << ": " << d.reason;
}
