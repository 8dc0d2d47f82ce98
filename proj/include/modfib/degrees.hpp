#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "modfib/subgroups.hpp"
#include "modfib/tables.hpp"

namespace modfib {

// A rational j-invariant in lowest terms with positive denominator.
class JInvariant {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  JInvariant() = default;
  explicit JInvariant(Rational value) : value_(std::move(value)) {}
  static JInvariant parse(const std::string& text);  // "a" or "a/b"; throws ParseError

  const Rational& value() const { return value_; }
  std::string to_string() const;

  friend bool operator==(const JInvariant& x, const JInvariant& y) { return x.value_ == y.value_; }
  friend bool operator<(const JInvariant& x, const JInvariant& y) { return x.value_ < y.value_; }

 private:
  Rational value_;
};

bool is_cm(const JInvariant& j);

struct DegreeMultiset {
  Curve curve = Curve::X0;
  std::uint32_t n = 1;
  std::vector<std::uint64_t> values;  // ascending
  std::string source;

  std::string to_string() const;  // "2,3,3"
};

enum class Regime { Infinite, All };

struct DegreeSet {
  Curve curve = Curve::X0;
  std::uint32_t n = 1;
  Regime regime = Regime::Infinite;
  std::vector<std::uint64_t> values;  // ascending, distinct

  // Results using the conjectural completeness of the exceptional list.
  bool conditional() const { return regime == Regime::All; }
};

// deg(X_curve(n) -> X_curve(m)).
std::uint64_t curve_degree(Curve c, std::uint32_t n, std::uint32_t m);

// Total fiber degree [GL_2 : +-H(n)].
std::uint64_t fiber_total(Curve c, std::uint32_t n);

// Orbit sizes of +-H(n)\GL_2(Z/n) under +-G.  G is any open subgroup; its
// image mod n is used.
DegreeMultiset fiber_degrees(Curve c, std::uint32_t n, const SubgroupSpec& g);
// Same, refusing CM j (including 0 and 1728).
DegreeMultiset fiber_degrees(Curve c, std::uint32_t n, const JInvariant& j, const SubgroupSpec& g);

DegreeSet point_degrees(Curve c, std::uint32_t n, const SubgroupSpec& g);

// Contribution of divisor m: { d * deg(n, m) : d in D(m) }.
struct DivisorContribution {
  std::uint32_t m;
  std::vector<std::uint64_t> degrees;
};
std::vector<DivisorContribution> degree_contributions(Curve c, std::uint32_t n, Regime r);

DegreeSet infinite_degree_set(Curve c, std::uint32_t n);
DegreeSet all_degree_set(Curve c, std::uint32_t n);

struct LabelledMultiset {
  std::string label;
  std::uint32_t level;
  DegreeMultiset multiset;
};

// Every infinite-family orbit multiset of level m | n, scaled to level n.
// Only the X0 rows are embedded; X1 needs rows supplied by the caller and
// throws MissingCatalog otherwise.
std::vector<LabelledMultiset> infinite_fiber_multisets(Curve c, std::uint32_t n,
                                                       const std::vector<InfiniteClosureRow>* rows = nullptr);

struct ConsistencyReport {
  bool consistent = false;
  std::vector<std::uint64_t> from_multisets;
  std::vector<std::uint64_t> from_constants;
};

// Compares the X0 degree set built from the orbit multisets with the one
// built from the per-level constants.
ConsistencyReport theorem_consistency_check(std::uint32_t n);

}  // namespace modfib
