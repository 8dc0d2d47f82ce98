#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace oracle {

namespace {

std::int64_t md(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

M inverse(const M& x, std::int64_t n) {
  const std::int64_t d = det(x, n);
  for (std::int64_t e = 0; e < n; ++e)
    if (md(d * e, n) == 1 % n)
      return {md(x[3] * e, n), md(-x[1] * e, n), md(-x[2] * e, n), md(x[0] * e, n)};
  throw std::logic_error("singular matrix");
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t phi(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t k = 1; k <= n; ++k)
    if (gcd(k, n) == 1) ++c;
  return c;
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

M mul(const M& x, const M& y, std::int64_t n) {
  return {md(x[0] * y[0] + x[1] * y[2], n), md(x[0] * y[1] + x[1] * y[3], n),
          md(x[2] * y[0] + x[3] * y[2], n), md(x[2] * y[1] + x[3] * y[3], n)};
}

std::int64_t det(const M& x, std::int64_t n) { return md(x[0] * x[3] - x[1] * x[2], n); }

std::vector<M> all_invertible(std::int64_t n) {
  std::vector<M> out;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d)
          if (gcd(md(a * d - b * c, n), n) == 1) out.push_back({a, b, c, d});
  return out;
}

std::uint64_t count_gl2(std::int64_t n) { return all_invertible(n).size(); }

std::uint64_t count_sl2(std::int64_t n) {
  std::uint64_t c = 0;
  for (const M& m : all_invertible(n))
    if (det(m, n) == 1 % n) ++c;
  return c;
}

std::set<M> generate(const std::vector<M>& gens, std::int64_t n) {
  const M id{1 % n, 0, 0, 1 % n};
  std::set<M> seen{id};
  std::deque<M> todo{id};
  while (!todo.empty()) {
    const M x = todo.front();
    todo.pop_front();
    for (const M& g : gens) {
      const M y = mul(x, g, n);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

namespace {

// Primitive column vectors mod n and a canonical form under a scaling set.
std::vector<std::pair<std::int64_t, std::int64_t>> primitive_vectors(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      if (gcd(gcd(x, y), n) == 1) out.emplace_back(x, y);
  return out;
}

std::pair<std::int64_t, std::int64_t> canonical(std::pair<std::int64_t, std::int64_t> v,
                                                const std::vector<std::int64_t>& scalars, std::int64_t n) {
  auto best = v;
  for (std::int64_t s : scalars) best = std::min(best, {md(s * v.first, n), md(s * v.second, n)});
  return best;
}

std::vector<std::uint64_t> vector_orbits(const std::set<M>& group, std::int64_t n,
                                         const std::vector<std::int64_t>& scalars) {
  std::map<std::pair<std::int64_t, std::int64_t>, bool> seen;
  for (auto v : primitive_vectors(n)) seen[canonical(v, scalars, n)] = false;
  std::vector<M> inverses;
  for (const M& g : group) inverses.push_back(inverse(g, n));
  std::vector<std::uint64_t> sizes;
  for (auto& [v, done] : seen) {
    if (done) continue;
    std::set<std::pair<std::int64_t, std::int64_t>> orbit;
    for (const M& x : inverses) {
      const std::pair<std::int64_t, std::int64_t> w{md(x[0] * v.first + x[1] * v.second, n),
                                                    md(x[2] * v.first + x[3] * v.second, n)};
      orbit.insert(canonical(w, scalars, n));
    }
    for (const auto& w : orbit) seen[w] = true;
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::int64_t> units(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k < n; ++k)
    if (gcd(k, n) == 1) out.push_back(k);
  if (n == 1) out = {0};
  return out;
}

}  // namespace

std::uint64_t count_projective_line(std::int64_t n) {
  std::set<std::pair<std::int64_t, std::int64_t>> pts;
  for (auto v : primitive_vectors(n)) pts.insert(canonical(v, units(n), n));
  return pts.size();
}

std::uint64_t count_primitive_vectors_mod_sign(std::int64_t n) {
  std::set<std::pair<std::int64_t, std::int64_t>> pts;
  for (auto v : primitive_vectors(n)) pts.insert(canonical(v, {1, md(-1, n)}, n));
  return pts.size();
}

std::vector<std::uint64_t> line_orbits(const std::set<M>& group, std::int64_t n) {
  return vector_orbits(group, n, units(n));
}

std::vector<std::uint64_t> signed_vector_orbits(const std::set<M>& group, std::int64_t n) {
  return vector_orbits(group, n, {1, md(-1, n)});
}

Census census_x0(std::int64_t n) {
  Census c{};
  c.index = n;
  for (std::int64_t p = 2; p <= n; ++p)
    if (is_prime(p) && n % p == 0) c.index = c.index / p * (p + 1);
  // Elliptic points: solutions of x^2 + 1 = 0 and x^2 + x + 1 = 0 mod N.
  c.e2 = c.e3 = 0;
  for (std::int64_t x = 0; x < n; ++x) {
    if (md(x * x + 1, n) == 0) ++c.e2;
    if (md(x * x + x + 1, n) == 0) ++c.e3;
  }
  c.cusps = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) c.cusps += phi(gcd(d, n / d));
  c.genus = 1 + (c.index - 3 * c.e2 - 4 * c.e3 - 6 * c.cusps) / 12;
  if (c.index - 3 * c.e2 - 4 * c.e3 - 6 * c.cusps + 12 != 12 * c.genus) throw std::logic_error("census");
  return c;
}

Census census_x1(std::int64_t n) {
  if (n <= 4) {
    static const Census small[] = {{1, 1, 1, 1, 0}, {1, 1, 1, 1, 0}, {3, 1, 0, 2, 0}, {4, 0, 1, 2, 0}, {6, 0, 0, 3, 0}};
    return small[n];
  }
  Census c{};
  std::int64_t idx2 = n * n;  // 2 * index
  for (std::int64_t p = 2; p <= n; ++p)
    if (is_prime(p) && n % p == 0) idx2 = idx2 / (p * p) * (p * p - 1);
  c.index = idx2 / 2;
  std::int64_t cusps2 = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) cusps2 += phi(d) * phi(n / d);
  c.cusps = cusps2 / 2;
  c.genus = 1 + (c.index - 6 * c.cusps) / 12;
  return c;
}

}  // namespace oracle
