#include <gtest/gtest.h>

#include "modfib/arith.hpp"
#include "modfib/catalog.hpp"
#include "modfib/closures.hpp"
#include "modfib/modular_invariants.hpp"
#include "random_groups.hpp"

using namespace modfib;

namespace {

SubgroupSpec row56() {
  return load_subgroup(std::string(MODFIB_TEST_DATA) + "/exceptional/exceptional_56_2268945.json");
}

}  // namespace

TEST(Equivalence, Examples) {
  const CosetTable b02 = CosetTable::for_family({FamilyKind::B0, 2});
  const SubgroupSpec triv = make_spec(2, {});
  EXPECT_TRUE(h_equivalent(b02, triv, triv));
  EXPECT_TRUE(ch_equivalent(b02, triv, triv));
  EXPECT_FALSE(h_equivalent(b02, triv, full_gl2(2)));

  // Presented at modulus 14, the kernel of reduction to 7 lies in B0(7).
  const CosetTable b07 = CosetTable::for_family({FamilyKind::B0, 7});
  const SubgroupSpec g = reduce(row56(), 14);
  SubgroupSpec kg = g;
  for (const Mat2& k : kernel_generators(14, 7)) kg.generators.push_back(k);
  EXPECT_TRUE(h_equivalent(b07, g, kg));
  EXPECT_TRUE(ch_equivalent(b07, g, kg));
}

TEST(Equivalence, HWithoutCh) {
  // Search modulus 4 for a pair equal on the identity block only.
  const CosetTable t = CosetTable::for_family({FamilyKind::B0, 4});
  const auto all = all_gl2(4);
  bool found = false;
  for (std::size_t i = 0; i < all.size() && !found; ++i)
    for (std::size_t j = 0; j < all.size() && !found; ++j) {
      const SubgroupSpec x = make_spec(4, {all[i]}), y = make_spec(4, {all[j]});
      if (h_equivalent(t, x, y) && !ch_equivalent(t, x, y)) found = true;
    }
  EXPECT_TRUE(found);
}

TEST(HClosure, Examples) {
  const ClosureResult full = h_closure(CosetTable::for_family({FamilyKind::B0, 5}), full_gl2(5));
  EXPECT_EQ(full.index, 1u);
  const ClosureResult triv = h_closure(CosetTable::for_family({FamilyKind::B0, 2}), make_spec(2, {}));
  // Brute force over GL2(Z/2): g keeps the identity block {H} iff Hg = H.
  const StandardFamily b02{FamilyKind::B0, 2};
  std::uint64_t fixing = 0;
  for (const Mat2& g : all_gl2(2)) {
    bool ok = true;
    for (const Mat2& h : all_gl2(2))
      if (b02.contains(h)) ok = ok && b02.contains(h * g);
    fixing += ok;
  }
  EXPECT_EQ(triv.order, fixing);
  // The CH-closure keeps every coset, leaving only the core of B0(2).
  EXPECT_EQ(ch_closure(CosetTable::for_family(b02), make_spec(2, {})).order, 1u);
}

TEST(HClosure, CandidatePoolSize) {
  testing_support::Rng rng(301);
  for (std::uint32_t n : {3u, 4u, 6u}) {
    const StandardFamily fam{FamilyKind::B0, n};
    const CosetTable t = CosetTable::for_family(fam);
    const std::uint64_t h_order = gl2_order(n) / fam.index();
    for (int i = 0; i < 20; ++i) {
      const SubgroupSpec g = testing_support::random_subgroup(rng, n);
      const ClosureResult r = h_closure(t, g);
      const std::uint64_t block = r.partition.identity_block().size();
      // The closure lies in the union of the identity-block cosets.
      EXPECT_LE(r.order, block * h_order);
      const Subgroup c = Subgroup::enumerate(r.closure);
      std::uint64_t in_pool = 0;
      c.for_each([&](const Mat2& m) {
        const auto id = t.identify(m);
        if (r.partition.block_of[id] == 0) ++in_pool;
      });
      EXPECT_EQ(in_pool, c.order());
      const Subgroup cc = Subgroup::enumerate(ch_closure(t, g).closure);
      cc.for_each([&](const Mat2& m) { EXPECT_TRUE(c.contains(m)); });
    }
  }
}

TEST(ChClosure, ExceptionalRowAtSeven) {
  const CosetTable t = CosetTable::for_family({FamilyKind::B0, 7});
  const ClosureResult r = ch_closure(t, row56());
  const Subgroup c = Subgroup::enumerate(r.closure);
  EXPECT_EQ(label_invariants(c), (LabelInvariants{7, 56, 1}));
  EXPECT_EQ(r.partition.sorted_sizes(), (std::vector<std::uint64_t>{2, 3, 3}));
  EXPECT_TRUE(ch_equivalent(t, row56(), r.closure));
  EXPECT_FALSE(ch_closed(t, row56()));
  EXPECT_TRUE(ch_closed(t, r.closure));
  // The closure level divides the SL-level 14 of the input.
  EXPECT_EQ(14 % gl_level(c), 0u);
}

TEST(ChClosure, TrivialAndFull) {
  EXPECT_EQ(ch_closure(CosetTable::for_family({FamilyKind::B0, 2}), make_spec(2, {})).order, 1u);
  for (std::uint32_t n = 2; n <= 12; ++n) {
    const StandardFamily fam{FamilyKind::B0, n};
    const CosetTable t = CosetTable::for_family(fam);
    EXPECT_TRUE(ch_closed(t, full_gl2(n))) << n;
    EXPECT_TRUE(ch_closed(t, fam.spec())) << n;
  }
}

TEST(ChClosure, BruteForceOracleExamples) {
  const StandardFamily b03{FamilyKind::B0, 3};
  const Subgroup o = brute_force_ch_closure(b03, make_spec(3, {}));
  const Subgroup c = Subgroup::enumerate(ch_closure(CosetTable::for_family(b03), make_spec(3, {})).closure);
  EXPECT_TRUE(same_group(o, c));
  EXPECT_EQ(brute_force_ch_closure(b03, full_gl2(3)).index(), 1u);
  EXPECT_THROW(brute_force_ch_closure({FamilyKind::B0, 30}, make_spec(30, {})), std::exception);
}

TEST(GeneratingSet, Regenerates) {
  const Subgroup g = Subgroup::enumerate(StandardFamily{FamilyKind::B1, 9}.spec());
  const SubgroupSpec s = generating_set(9, g.elements());
  EXPECT_TRUE(same_group(g, Subgroup::enumerate(s)));
  EXPECT_LE(s.generators.size(), 4u);
}
