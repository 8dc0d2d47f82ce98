#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "modfib/subgroups.hpp"

namespace modfib {

enum class Curve { X0, X1 };

std::string curve_name(Curve c);  // "x0" / "x1"

// The thirteen rational CM j-invariants, as decimal strings.
const std::vector<std::string>& cm_j_strings();

struct LevelDegrees {
  std::uint32_t level;
  std::vector<std::uint64_t> degrees;  // ascending
};

// Degrees of infinitely many points with rational j contributed at each
// level (unlisted levels contribute nothing).
const std::vector<LevelDegrees>& infinite_level_degrees(Curve c);
// Same, but counting all such points; assumes the conjectural list of
// exceptional SL_2-intersections is complete.
const std::vector<LevelDegrees>& all_level_degrees(Curve c);

// Classes of B0-closed subgroups occurring for infinitely many rational j,
// with the orbit multiset of the identity-level coset action.
struct InfiniteClosureRow {
  std::uint32_t level;
  std::string label;
  std::vector<std::uint64_t> orbits;
};
const std::vector<InfiniteClosureRow>& infinite_b0_closures();

// Closures occurring for only finitely many rational j.
struct FiniteClosureRow {
  Curve curve;
  std::uint32_t level;
  std::string label;
  std::vector<std::string> j_invariants;
  std::vector<std::uint64_t> orbits;
};
const std::vector<FiniteClosureRow>& finite_closures(Curve c);

// Exceptional images with explicit generators.  curve_label names the
// modular curve the point lies on, not the image itself.
struct ExceptionalRow {
  std::string curve_label;
  std::string j;
  std::uint32_t modulus;  // = GL-level of the image
  std::uint64_t index;
  int genus;
  std::uint32_t sl_level;
  bool unlisted_sl_intersection;
  std::vector<std::array<std::int64_t, 4>> generators;

  SubgroupSpec spec() const;
};
const std::vector<ExceptionalRow>& exceptional_rows();

// SL-levels admitted by the candidate filter.
const std::vector<std::uint32_t>& candidate_sl_levels();

}  // namespace modfib
