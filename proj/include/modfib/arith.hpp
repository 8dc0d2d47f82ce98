#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace modfib {

struct PrimePower {
  std::uint32_t p;
  int e;
  std::uint32_t value() const;
};

// Trial division; ascending primes.
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint32_t> prime_divisors(std::uint64_t n);
std::vector<std::uint32_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
// Dedekind psi: n * prod (1 + 1/p).
std::uint64_t dedekind_psi(std::uint64_t n);

std::uint32_t mod_reduce(std::int64_t x, std::uint32_t n);
std::optional<std::uint32_t> inverse_mod(std::uint32_t a, std::uint32_t n);

// Units of Z/n in increasing order (for n == 1 this is {0}).
std::vector<std::uint32_t> units_mod(std::uint32_t n);

// A small generating set of (Z/n)^*, found greedily.
std::vector<std::uint32_t> unit_group_generators(std::uint32_t n);

// |GL_2(Z/n)| and |SL_2(Z/n)|; throw if the value does not fit in 64 bits.
std::uint64_t gl2_order(std::uint64_t n);
std::uint64_t sl2_order(std::uint64_t n);

}  // namespace modfib
