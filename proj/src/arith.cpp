#include "modfib/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "modfib/errors.hpp"

namespace modfib {

std::uint32_t PrimePower::value() const {
  std::uint32_t v = 1;
  for (int i = 0; i < e; ++i) v *= p;
  return v;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw InputError("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({static_cast<std::uint32_t>(p), e});
  }
  if (n > 1) out.push_back({static_cast<std::uint32_t>(n), 1});
  return out;
}

std::vector<std::uint32_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.p);
  return out;
}

std::vector<std::uint32_t> divisors(std::uint64_t n) {
  std::vector<std::uint32_t> out{1};
  for (const auto& pp : factorize(n)) {
    const std::size_t old = out.size();
    std::uint32_t q = 1;
    for (int i = 0; i < pp.e; ++i) {
      q *= pp.p;
      for (std::size_t k = 0; k < old; ++k) out.push_back(out[k] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (const auto& pp : factorize(n)) r = r / pp.p * (pp.p - 1);
  return r;
}

std::uint64_t dedekind_psi(std::uint64_t n) {
  std::uint64_t r = n;
  for (const auto& pp : factorize(n)) r = r / pp.p * (pp.p + 1);
  return r;
}

std::uint32_t mod_reduce(std::int64_t x, std::uint32_t n) {
  std::int64_t r = x % static_cast<std::int64_t>(n);
  if (r < 0) r += n;
  return static_cast<std::uint32_t>(r);
}

std::optional<std::uint32_t> inverse_mod(std::uint32_t a, std::uint32_t n) {
  if (n == 1) return 0u;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = n, new_r = a % n;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) return std::nullopt;
  return mod_reduce(t, n);
}

std::vector<std::uint32_t> units_mod(std::uint32_t n) {
  if (n == 1) return {0};
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  return out;
}

std::vector<std::uint32_t> unit_group_generators(std::uint32_t n) {
  if (n <= 2) return {};
  const auto all = units_mod(n);
  std::vector<char> reached(n, 0);
  reached[1] = 1;
  std::vector<std::uint32_t> group{1};
  std::vector<std::uint32_t> gens;
  // Take the unit that enlarges the current subgroup the most.
  while (group.size() < all.size()) {
    std::uint32_t best = 0;
    std::size_t best_order = 0;
    for (std::uint32_t u : all) {
      if (reached[u]) continue;
      std::size_t ord = 1;
      std::uint64_t x = u;
      while (!reached[x]) {
        x = x * u % n;
        ++ord;
      }
      if (ord > best_order) {
        best_order = ord;
        best = u;
      }
    }
    gens.push_back(best);
    // Close under all generators found so far.
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::uint32_t g : gens) {
        const std::uint32_t y = static_cast<std::uint32_t>(std::uint64_t{group[i]} * g % n);
        if (!reached[y]) {
          reached[y] = 1;
          group.push_back(y);
        }
      }
    }
  }
  return gens;
}

namespace {

// Multiplies in 128 bits and rejects any product above 64 bits; both
// operands stay below 2^64, so the 128-bit product never wraps.
void mul_checked(std::uint64_t& r, std::uint64_t f) {
  const unsigned __int128 v = static_cast<unsigned __int128>(r) * f;
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw InputError("group order does not fit in 64 bits");
  r = static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t gl2_order(std::uint64_t n) {
  std::uint64_t r = 1;
  for (const auto& pp : factorize(n)) {
    const std::uint64_t p = pp.p;
    for (int i = 1; i < pp.e; ++i)
      for (int k = 0; k < 4; ++k) mul_checked(r, p);
    for (std::uint64_t f : {p - 1, p + 1, p, p - 1}) mul_checked(r, f);
  }
  return r;
}

std::uint64_t sl2_order(std::uint64_t n) {
  std::uint64_t r = 1;
  for (const auto& pp : factorize(n)) {
    const std::uint64_t p = pp.p;
    for (int i = 1; i < pp.e; ++i)
      for (int k = 0; k < 3; ++k) mul_checked(r, p);
    for (std::uint64_t f : {p, p - 1, p + 1}) mul_checked(r, f);
  }
  return r;
}

}  // namespace modfib
