#pragma once

#include <cstdint>
#include <vector>

#include "modfib/coset_actions.hpp"
#include "modfib/subgroups.hpp"

namespace modfib {

// H-closure: largest group whose identity-coset orbit matches G's.
// CH-closure: largest group whose orbit partition matches G's.
enum class ClosureKind { H, CH };

struct ClosureResult {
  ClosureKind kind = ClosureKind::CH;
  SubgroupSpec closure;       // at the table modulus
  std::uint64_t order = 0;    // of the closure in GL_2(Z/n)
  std::uint64_t index = 0;
  OrbitPartition partition;   // of the cosets under the input
};

OrbitPartition partition_under(const CosetTable& table, const SubgroupSpec& g);

bool h_equivalent(const CosetTable& table, const SubgroupSpec& x, const SubgroupSpec& y);
bool ch_equivalent(const CosetTable& table, const SubgroupSpec& x, const SubgroupSpec& y);

ClosureResult h_closure(const CosetTable& table, const SubgroupSpec& g);
ClosureResult ch_closure(const CosetTable& table, const SubgroupSpec& g);

// Whether G (as an open subgroup, at any modulus) equals its CH-closure.
bool ch_closed(const CosetTable& table, const SubgroupSpec& g, std::uint64_t cap = kDefaultCap);

// Independent construction of the CH-closure straight from its definition:
// intersect the product sets H^x G over all conjugates and grow the largest
// group inside.  Limited to |GL_2(Z/n)| <= 10^5.
Subgroup brute_force_ch_closure(const StandardFamily& family, const SubgroupSpec& g);

// A short generating set of the group formed by the given elements, found by
// seeded random sampling.  Throws ConsistencyError if they are not a group.
SubgroupSpec generating_set(std::uint32_t n, const std::vector<Mat2>& elements);

}  // namespace modfib
