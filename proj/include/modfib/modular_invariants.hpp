#pragma once

#include <cstdint>
#include <string>

#include "modfib/subgroups.hpp"

namespace modfib {

// deg(X0(n) -> X0(m)) and deg(X1(n) -> X1(m)) for m | n, from coset counts.
// Throws ConsistencyError if the count disagrees with the closed form.
std::uint64_t deg_x0(std::uint32_t n, std::uint32_t m);
std::uint64_t deg_x1(std::uint32_t n, std::uint32_t m);

struct GenusData {
  std::uint64_t index = 0;  // [SL_2 : +-(G cap SL_2)] at the SL-level
  std::uint64_t e2 = 0;     // cosets fixed by [[0,-1],[1,0]]
  std::uint64_t e3 = 0;     // cosets fixed by [[0,-1],[1,-1]]
  std::uint64_t cusps = 0;  // orbits of [[1,1],[0,1]]
  std::int64_t genus = 0;
  std::uint32_t sl_level = 1;
};

// Genus of X_G from the action of SL_2 on the cosets of +-(G cap SL_2).
GenusData genus_data(const Subgroup& g, std::uint64_t cap = kDefaultCap);

struct LabelInvariants {
  std::uint32_t level = 1;
  std::uint64_t index = 1;
  std::int64_t genus = 0;

  std::string prefix() const;  // "N.i.g"
  bool operator==(const LabelInvariants&) const = default;
};

LabelInvariants label_invariants(const Subgroup& g, std::uint64_t cap = kDefaultCap);

// Leading "N.i.g" of a label "N.i.g.tag.k"; throws ParseError.
LabelInvariants parse_label(const std::string& label);

}  // namespace modfib
