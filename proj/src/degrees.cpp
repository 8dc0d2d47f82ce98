#include "modfib/degrees.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "modfib/arith.hpp"
#include "modfib/closures.hpp"
#include "modfib/coset_actions.hpp"
#include "modfib/errors.hpp"
#include "modfib/modular_invariants.hpp"

namespace modfib {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

StandardFamily family_for(Curve c, std::uint32_t n) {
  return StandardFamily{c == Curve::X0 ? FamilyKind::B0 : FamilyKind::B1, n};
}

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

JInvariant JInvariant::parse(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    negative = num[0] == '-';
    num.erase(0, 1);
  }
  if (!all_digits(num) || !all_digits(den)) throw ParseError("not a rational number: '" + raw + "'");
  cpp_int p(num), q(den);
  if (q == 0) throw ParseError("zero denominator in '" + raw + "'");
  if (negative) p = -p;
  return JInvariant(Rational(p, q));
}

std::string JInvariant::to_string() const {
  const cpp_int p = boost::multiprecision::numerator(value_);
  const cpp_int q = boost::multiprecision::denominator(value_);
  if (q == 1) return p.str();
  return p.str() + "/" + q.str();
}

bool is_cm(const JInvariant& j) {
  static const std::vector<JInvariant> cm = [] {
    std::vector<JInvariant> v;
    for (const auto& s : cm_j_strings()) v.push_back(JInvariant::parse(s));
    return v;
  }();
  return std::find(cm.begin(), cm.end(), j) != cm.end();
}

std::string DegreeMultiset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::uint64_t curve_degree(Curve c, std::uint32_t n, std::uint32_t m) {
  return c == Curve::X0 ? deg_x0(n, m) : deg_x1(n, m);
}

std::uint64_t fiber_total(Curve c, std::uint32_t n) { return family_for(c, n).index(); }

DegreeMultiset fiber_degrees(Curve c, std::uint32_t n, const SubgroupSpec& g) {
  validate(g);
  const CosetTable table = CosetTable::for_family(family_for(c, n));
  const OrbitPartition part = partition_under(table, adjoin_minus_identity(g));
  DegreeMultiset out;
  out.curve = c;
  out.n = n;
  out.values = part.sorted_sizes();
  out.source = g.label.value_or("input");
  return out;
}

DegreeMultiset fiber_degrees(Curve c, std::uint32_t n, const JInvariant& j, const SubgroupSpec& g) {
  if (is_cm(j))
    throw CmInputError("j = " + j.to_string() + " is a CM j-invariant; fibers above it are not covered");
  return fiber_degrees(c, n, g);
}

DegreeSet point_degrees(Curve c, std::uint32_t n, const SubgroupSpec& g) {
  DegreeSet out;
  out.curve = c;
  out.n = n;
  out.values = sorted_unique(fiber_degrees(c, n, g).values);
  return out;
}

std::vector<DivisorContribution> degree_contributions(Curve c, std::uint32_t n, Regime r) {
  if (n == 0) throw InputError("n must be positive");
  const auto& constants = r == Regime::Infinite ? infinite_level_degrees(c) : all_level_degrees(c);
  std::vector<DivisorContribution> out;
  for (const auto& row : constants) {
    if (n % row.level != 0) continue;
    const std::uint64_t k = curve_degree(c, n, row.level);
    DivisorContribution dc{row.level, {}};
    for (std::uint64_t d : row.degrees) dc.degrees.push_back(d * k);
    out.push_back(std::move(dc));
  }
  return out;
}

namespace {

DegreeSet assemble(Curve c, std::uint32_t n, Regime r) {
  DegreeSet out;
  out.curve = c;
  out.n = n;
  out.regime = r;
  for (const auto& dc : degree_contributions(c, n, r))
    out.values.insert(out.values.end(), dc.degrees.begin(), dc.degrees.end());
  out.values = sorted_unique(std::move(out.values));
  return out;
}

}  // namespace

DegreeSet infinite_degree_set(Curve c, std::uint32_t n) { return assemble(c, n, Regime::Infinite); }

DegreeSet all_degree_set(Curve c, std::uint32_t n) { return assemble(c, n, Regime::All); }

std::vector<LabelledMultiset> infinite_fiber_multisets(Curve c, std::uint32_t n,
                                                       const std::vector<InfiniteClosureRow>* rows) {
  if (rows == nullptr) {
    if (c == Curve::X1)
      throw MissingCatalog("X1 infinite-closure rows are not embedded; supply them from an ingested catalog");
    rows = &infinite_b0_closures();
  }
  std::vector<LabelledMultiset> out;
  for (const auto& row : *rows) {
    if (n % row.level != 0) continue;
    const std::uint64_t k = curve_degree(c, n, row.level);
    LabelledMultiset lm{row.label, row.level, {c, n, {}, row.label}};
    for (std::uint64_t d : row.orbits) lm.multiset.values.push_back(d * k);
    std::sort(lm.multiset.values.begin(), lm.multiset.values.end());
    out.push_back(std::move(lm));
  }
  return out;
}

ConsistencyReport theorem_consistency_check(std::uint32_t n) {
  ConsistencyReport r;
  for (const auto& lm : infinite_fiber_multisets(Curve::X0, n))
    r.from_multisets.insert(r.from_multisets.end(), lm.multiset.values.begin(), lm.multiset.values.end());
  r.from_multisets = sorted_unique(std::move(r.from_multisets));
  r.from_constants = infinite_degree_set(Curve::X0, n).values;
  r.consistent = r.from_multisets == r.from_constants;
  return r;
}

}  // namespace modfib
