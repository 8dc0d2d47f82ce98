#include "modfib/subgroups.hpp"

#include <algorithm>
#include <numeric>

#include "modfib/arith.hpp"
#include "modfib/errors.hpp"

namespace modfib {

namespace {

using u128 = unsigned __int128;

// Embeds a matrix mod q (q | n, gcd(q, n/q) = 1) with identity elsewhere.
Mat2 embed(const Mat2& local, std::uint32_t n) {
  const std::uint32_t q = local.modulus();
  if (q == n) return local;
  const Mat2 parts[] = {local, Mat2::identity(n / q)};
  return crt_join(parts);
}

std::uint32_t prime_power_part(std::uint32_t n, std::uint32_t p) {
  std::uint32_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

}  // namespace

void validate(const SubgroupSpec& spec) {
  if (spec.modulus == 0) throw InputError("modulus must be positive");
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    const Mat2& g = spec.generators[i];
    if (g.modulus() != spec.modulus)
      throw ModulusMismatch("generator #" + std::to_string(i) + " " + g.to_string() + " is mod " +
                            std::to_string(g.modulus()) + ", expected mod " +
                            std::to_string(spec.modulus));
    if (!g.is_invertible())
      throw NonInvertible("generator #" + std::to_string(i) + " " + g.to_string() +
                          " has determinant " + std::to_string(g.det()) + ", gcd with " +
                          std::to_string(spec.modulus) + " is " +
                          std::to_string(std::gcd(g.det(), spec.modulus)));
  }
}

SubgroupSpec make_spec(std::uint32_t n, std::vector<Mat2> generators,
                       std::optional<std::string> label) {
  SubgroupSpec spec{n, std::move(generators), std::move(label)};
  validate(spec);
  return spec;
}

SubgroupSpec reduce(const SubgroupSpec& spec, std::uint32_t m) {
  SubgroupSpec out{m, {}, std::nullopt};
  for (const Mat2& g : spec.generators) out.generators.push_back(g.reduce(m));
  if (m == spec.modulus) out.label = spec.label;
  return out;
}

std::vector<Mat2> local_factor_generators(std::uint32_t n, std::uint32_t p) {
  const std::uint32_t q = prime_power_part(n, p);
  std::vector<Mat2> out;
  if (q == 1) return out;
  for (const Mat2& g : gl2_generators(q)) out.push_back(embed(g, n));
  return out;
}

std::vector<Mat2> kernel_generators(std::uint32_t n, std::uint32_t m) {
  if (m == 0 || n % m != 0)
    throw InputError(std::to_string(m) + " does not divide " + std::to_string(n));
  std::vector<Mat2> out;
  for (const auto& pp : factorize(n)) {
    const std::uint32_t q = pp.value();
    const std::uint32_t f = prime_power_part(m, pp.p);
    if (f == 1) {
      for (const Mat2& g : gl2_generators(q)) out.push_back(embed(g, n));
      continue;
    }
    // I + p^g E_ij for f <= p^g < q generates the congruence kernel.
    for (std::uint32_t pg = f; pg < q; pg *= pp.p) {
      out.push_back(embed(Mat2(q, 1 + pg, 0, 0, 1), n));
      out.push_back(embed(Mat2(q, 1, pg, 0, 1), n));
      out.push_back(embed(Mat2(q, 1, 0, pg, 1), n));
      out.push_back(embed(Mat2(q, 1, 0, 0, 1 + pg), n));
    }
  }
  return out;
}

SubgroupSpec saturate(const SubgroupSpec& spec, std::uint32_t n) {
  if (n == spec.modulus) return spec;
  SubgroupSpec out{n, {}, spec.label};
  for (const Mat2& g : spec.generators) out.generators.push_back(lift(g, n));
  for (const Mat2& k : kernel_generators(n, spec.modulus)) out.generators.push_back(k);
  return out;
}

SubgroupSpec adjoin_minus_identity(const SubgroupSpec& spec) {
  SubgroupSpec out = spec;
  out.label.reset();
  out.generators.push_back(Mat2::scalar(spec.modulus, -1));
  return out;
}

SubgroupSpec conjugate(const SubgroupSpec& spec, const Mat2& g) {
  const Mat2 gi = g.inverse();
  SubgroupSpec out{spec.modulus, {}, std::nullopt};
  for (const Mat2& s : spec.generators) out.generators.push_back(g * s * gi);
  return out;
}

SubgroupSpec full_gl2(std::uint32_t n) { return SubgroupSpec{n, gl2_generators(n), std::nullopt}; }

SubgroupSpec full_sl2(std::uint32_t n) { return SubgroupSpec{n, sl2_generators(n), std::nullopt}; }

Subgroup Subgroup::enumerate(const SubgroupSpec& spec, std::uint64_t cap) {
  validate(spec);
  Subgroup g;
  g.spec_ = spec;
  const std::uint32_t n = spec.modulus;
  if (n > kMaxKeyModulus)
    throw InputError("enumeration supports moduli up to " + std::to_string(kMaxKeyModulus));
  g.in_image_.assign(n, 0);
  g.lift_.assign(n, Mat2::identity(n));
  g.lift_inverse_.assign(n, Mat2::identity(n));
  const std::uint32_t one = 1 % n;
  g.in_image_[one] = 1;
  g.det_image_.push_back(one);
  for (std::size_t i = 0; i < g.det_image_.size(); ++i) {
    const std::uint32_t u = g.det_image_[i];
    for (const Mat2& s : spec.generators) {
      const std::uint32_t v = static_cast<std::uint32_t>(std::uint64_t{u} * s.det() % n);
      if (g.in_image_[v]) continue;
      g.in_image_[v] = 1;
      g.det_image_.push_back(v);
      g.lift_[v] = g.lift_[u] * s;
      g.lift_inverse_[v] = g.lift_[v].inverse();
    }
  }
  // Schreier generators of the determinant-one part.
  auto sl = std::make_shared<ElementSet>(n, cap);
  for (std::uint32_t u : g.det_image_) {
    for (const Mat2& s : spec.generators) {
      const std::uint32_t v = static_cast<std::uint32_t>(std::uint64_t{u} * s.det() % n);
      sl->adjoin(g.lift_[u] * s * g.lift_inverse_[v]);
    }
  }
  std::sort(g.det_image_.begin(), g.det_image_.end());
  g.sl_ = std::move(sl);
  return g;
}

std::uint64_t Subgroup::index() const { return gl2_order(modulus()) / order(); }

bool Subgroup::contains(const Mat2& m) const {
  if (m.modulus() != modulus())
    throw ModulusMismatch("element mod " + std::to_string(m.modulus()) + " tested against group mod " +
                          std::to_string(modulus()));
  const std::uint32_t d = m.det();
  if (!in_image_[d]) return false;
  return sl_->contains(m * lift_inverse_[d]);
}

bool Subgroup::contains_minus_identity() const { return contains(Mat2::scalar(modulus(), -1)); }

bool Subgroup::is_full_det() const { return det_image_.size() == euler_phi(modulus()); }

std::vector<Mat2> Subgroup::elements(std::uint64_t cap) const {
  if (order() > cap)
    throw CapExceeded("group has " + std::to_string(order()) + " elements, cap is " + std::to_string(cap),
                      0);
  std::vector<Mat2> out;
  out.reserve(order());
  for_each([&](const Mat2& m) { out.push_back(m); });
  return out;
}

std::uint64_t sl_index(const Subgroup& g) { return sl2_order(g.modulus()) / g.sl_order(); }

std::uint32_t gl_level(const Subgroup& g, std::uint64_t cap) {
  const std::uint32_t n = g.modulus();
  auto full_preimage = [&](std::uint32_t c) {
    const Subgroup r = Subgroup::enumerate(reduce(g.spec(), c), cap);
    return u128{r.order()} * gl2_order(n) == u128{g.order()} * gl2_order(c);
  };
  std::uint32_t d = n;
  for (std::uint32_t p : prime_divisors(n)) {
    while (d % p == 0 && full_preimage(d / p)) d /= p;
  }
  return d;
}

std::uint32_t sl_level(const Subgroup& g, std::uint64_t cap) {
  const std::uint32_t n = g.modulus();
  const auto& gens = g.sl_part().generators();
  auto full_preimage = [&](std::uint32_t c) {
    ElementSet r(c, cap);
    for (const Mat2& s : gens) r.adjoin(s.reduce(c));
    return u128{r.size()} * sl2_order(n) == u128{g.sl_order()} * sl2_order(c);
  };
  std::uint32_t d = n;
  for (std::uint32_t p : prime_divisors(n)) {
    while (d % p == 0 && full_preimage(d / p)) d /= p;
  }
  return d;
}

Subgroup intersect_sl2(const Subgroup& g) {
  Subgroup h = g;
  h.spec_ = SubgroupSpec{g.modulus(), g.sl_part().generators(), std::nullopt};
  const std::uint32_t one = 1 % g.modulus();
  h.det_image_ = {one};
  h.in_image_.assign(g.modulus(), 0);
  h.in_image_[one] = 1;
  h.lift_.assign(g.modulus(), Mat2::identity(g.modulus()));
  h.lift_inverse_ = h.lift_;
  return h;
}

bool same_group(const Subgroup& x, const Subgroup& y) {
  if (x.modulus() != y.modulus() || x.order() != y.order()) return false;
  return std::all_of(y.spec().generators.begin(), y.spec().generators.end(),
                     [&](const Mat2& s) { return x.contains(s); });
}

bool same_open_subgroup(const SubgroupSpec& x, const SubgroupSpec& y, std::uint64_t cap) {
  const std::uint32_t n = std::lcm(x.modulus, y.modulus);
  return same_group(Subgroup::enumerate(saturate(x, n), cap), Subgroup::enumerate(saturate(y, n), cap));
}

std::map<std::uint64_t, std::uint64_t> order_histogram(const Subgroup& g) {
  std::map<std::uint64_t, std::uint64_t> hist;
  g.for_each([&](const Mat2& m) { ++hist[m.order()]; });
  return hist;
}

std::optional<Mat2> find_conjugator(const Subgroup& x, const Subgroup& y, std::uint64_t search_cap) {
  if (x.modulus() != y.modulus())
    throw ModulusMismatch("conjugacy test needs equal moduli");
  if (x.order() != y.order() || x.sl_order() != y.sl_order() || x.det_image() != y.det_image())
    return std::nullopt;
  const std::uint32_t n = x.modulus();
  if (gl2_order(n) > search_cap)
    throw CapExceeded("conjugator search over GL2(Z/" + std::to_string(n) + ") exceeds cap", 0);
  if (x.order() <= (1u << 16) && order_histogram(x) != order_histogram(y)) return std::nullopt;
  const auto& gens = y.spec().generators;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d) {
          const Mat2 h(n, a, b, c, d);
          if (!h.is_invertible()) continue;
          const Mat2 hi = h.inverse();
          if (std::all_of(gens.begin(), gens.end(),
                          [&](const Mat2& s) { return x.contains(h * s * hi); }))
            return h;
        }
  return std::nullopt;
}

Subgroup commutator_subgroup(const Subgroup& g, std::uint64_t cap) {
  const std::uint32_t n = g.modulus();
  const auto& gens = g.spec().generators;
  ElementSet c(n, cap);
  std::vector<Mat2> pending;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Mat2 k = commutator(gens[i], gens[j]);
      if (c.adjoin(k)) pending.push_back(k);
    }
  while (!pending.empty()) {
    const Mat2 k = pending.back();
    pending.pop_back();
    for (const Mat2& s : gens) {
      const Mat2 y = s * k * s.inverse();
      if (c.adjoin(y)) pending.push_back(y);
    }
  }
  return Subgroup::enumerate(SubgroupSpec{n, c.generators(), std::nullopt}, cap);
}

AgreeableClosure agreeable_closure(const Subgroup& g, std::uint64_t cap) {
  const std::uint32_t n = g.modulus();
  AgreeableClosure out;
  out.working_modulus = n;
  out.commutator_sl_level = sl_level(commutator_subgroup(g, cap), cap);
  out.commutator_primes = prime_divisors(out.commutator_sl_level);
  std::vector<Mat2> gens = g.spec().generators;
  for (std::uint32_t u : unit_group_generators(n)) gens.push_back(Mat2::scalar(n, u));
  for (std::uint32_t p : prime_divisors(n)) {
    if (std::find(out.commutator_primes.begin(), out.commutator_primes.end(), p) !=
        out.commutator_primes.end())
      continue;
    for (const Mat2& s : local_factor_generators(n, p)) gens.push_back(s);
  }
  out.closure = SubgroupSpec{n, std::move(gens), std::nullopt};
  return out;
}

}  // namespace modfib
