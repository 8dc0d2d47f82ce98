#pragma once

// Independent reference computations for the tests.  Nothing here calls the
// group-theoretic parts of the library: matrices are plain integer arrays.

#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using M = std::array<std::int64_t, 4>;  // a, b, c, d

M mul(const M& x, const M& y, std::int64_t n);
std::int64_t det(const M& x, std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);

// Every invertible matrix mod n, by exhaustive search.
std::vector<M> all_invertible(std::int64_t n);
std::uint64_t count_gl2(std::int64_t n);
std::uint64_t count_sl2(std::int64_t n);

// The group generated by gens, by closing under multiplication.
std::set<M> generate(const std::vector<M>& gens, std::int64_t n);

// Counts of projective points and of primitive vectors up to sign mod n.
std::uint64_t count_projective_line(std::int64_t n);
std::uint64_t count_primitive_vectors_mod_sign(std::int64_t n);

// Orbit sizes (sorted) of a group on lines / on primitive column vectors up
// to sign, acting by v -> x^-1 v.  These are the right cosets of the upper
// triangular groups, matched through g -> g^-1 e1.
std::vector<std::uint64_t> line_orbits(const std::set<M>& group, std::int64_t n);
std::vector<std::uint64_t> signed_vector_orbits(const std::set<M>& group, std::int64_t n);

// Classical formulas for the modular curves X0(N) and X1(N).
struct Census {
  std::int64_t index, e2, e3, cusps, genus;
};
Census census_x0(std::int64_t n);
Census census_x1(std::int64_t n);  // PSL_2 data of Gamma1(N)

}  // namespace oracle
