#include "modfib/zmod_gl2.hpp"

#include <numeric>

#include "modfib/arith.hpp"
#include "modfib/errors.hpp"

namespace modfib {

namespace {

void check_modulus(std::uint32_t n) {
  if (n == 0 || n > (1u << 31)) throw InputError("modulus out of range: " + std::to_string(n));
}

std::uint32_t mulmod(std::uint32_t x, std::uint32_t y, std::uint32_t n) {
  return static_cast<std::uint32_t>(std::uint64_t{x} * y % n);
}

}  // namespace

Residue::Residue(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  check_modulus(modulus);
  value_ = mod_reduce(value, modulus);
}

bool Residue::is_unit() const { return std::gcd(value_, modulus_) == 1; }

Residue Residue::inverse() const {
  auto inv = inverse_mod(value_, modulus_);
  if (!inv)
    throw NonInvertible(std::to_string(value_) + " is not a unit mod " +
                        std::to_string(modulus_));
  return Residue(*inv, modulus_);
}

static void same_modulus(std::uint32_t x, std::uint32_t y) {
  if (x != y)
    throw ModulusMismatch("moduli differ: " + std::to_string(x) + " vs " + std::to_string(y));
}

Residue operator+(Residue x, Residue y) {
  same_modulus(x.modulus_, y.modulus_);
  return Residue(std::int64_t{x.value_} + y.value_, x.modulus_);
}

Residue operator-(Residue x, Residue y) {
  same_modulus(x.modulus_, y.modulus_);
  return Residue(std::int64_t{x.value_} - y.value_, x.modulus_);
}

Residue operator*(Residue x, Residue y) {
  same_modulus(x.modulus_, y.modulus_);
  return Residue(mulmod(x.value_, y.value_, x.modulus_), x.modulus_);
}

Mat2::Mat2(std::uint32_t modulus, std::int64_t a, std::int64_t b, std::int64_t c,
           std::int64_t d)
    : n_(modulus) {
  check_modulus(modulus);
  e_ = {mod_reduce(a, n_), mod_reduce(b, n_), mod_reduce(c, n_), mod_reduce(d, n_)};
}

Mat2 Mat2::identity(std::uint32_t modulus) { return Mat2(modulus, 1, 0, 0, 1); }

Mat2 Mat2::scalar(std::uint32_t modulus, std::int64_t lambda) {
  return Mat2(modulus, lambda, 0, 0, lambda);
}

Mat2 Mat2::from_key(std::uint32_t modulus, std::uint64_t key) {
  Mat2 m;
  m.n_ = modulus;
  m.e_ = {static_cast<std::uint32_t>(key >> 48), static_cast<std::uint32_t>((key >> 32) & 0xffff),
          static_cast<std::uint32_t>((key >> 16) & 0xffff), static_cast<std::uint32_t>(key & 0xffff)};
  return m;
}

std::uint64_t Mat2::key() const {
  return (std::uint64_t{e_[0]} << 48) | (std::uint64_t{e_[1]} << 32) |
         (std::uint64_t{e_[2]} << 16) | std::uint64_t{e_[3]};
}

std::uint32_t Mat2::det() const {
  const std::uint64_t ad = std::uint64_t{e_[0]} * e_[3] % n_;
  const std::uint64_t bc = std::uint64_t{e_[1]} * e_[2] % n_;
  return static_cast<std::uint32_t>((ad + n_ - bc) % n_);
}

std::uint32_t Mat2::trace() const {
  return static_cast<std::uint32_t>((std::uint64_t{e_[0]} + e_[3]) % n_);
}

bool Mat2::is_invertible() const { return std::gcd(det(), n_) == 1; }

bool Mat2::is_identity() const { return *this == identity(n_); }

Mat2 Mat2::inverse() const {
  auto inv = inverse_mod(det(), n_);
  if (!inv) throw NonInvertible("matrix " + to_string() + " is not invertible mod " + std::to_string(n_));
  const std::int64_t t = *inv;
  return Mat2(n_, t * e_[3] % n_, -(t * e_[1] % n_), -(t * e_[2] % n_), t * e_[0] % n_);
}

Mat2 Mat2::reduce(std::uint32_t m) const {
  if (m == 0 || n_ % m != 0)
    throw InputError("cannot reduce modulo " + std::to_string(m) + ": it does not divide " +
                     std::to_string(n_));
  return Mat2(m, e_[0], e_[1], e_[2], e_[3]);
}

Mat2 Mat2::pow(std::uint64_t k) const {
  Mat2 result = identity(n_);
  Mat2 base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::uint64_t Mat2::order() const {
  if (!is_invertible()) throw NonInvertible("order of a singular matrix");
  const Mat2 id = identity(n_);
  Mat2 x = *this;
  std::uint64_t k = 1;
  while (!(x == id)) {
    x = x * *this;
    ++k;
  }
  return k;
}

std::string Mat2::to_string() const {
  return "[" + std::to_string(e_[0]) + "," + std::to_string(e_[1]) + "," +
         std::to_string(e_[2]) + "," + std::to_string(e_[3]) + "]";
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  same_modulus(x.n_, y.n_);
  const std::uint64_t n = x.n_;
  const auto& p = x.e_;
  const auto& q = y.e_;
  Mat2 r;
  r.n_ = x.n_;
  r.e_ = {static_cast<std::uint32_t>((std::uint64_t{p[0]} * q[0] + std::uint64_t{p[1]} * q[2]) % n),
          static_cast<std::uint32_t>((std::uint64_t{p[0]} * q[1] + std::uint64_t{p[1]} * q[3]) % n),
          static_cast<std::uint32_t>((std::uint64_t{p[2]} * q[0] + std::uint64_t{p[3]} * q[2]) % n),
          static_cast<std::uint32_t>((std::uint64_t{p[2]} * q[1] + std::uint64_t{p[3]} * q[3]) % n)};
  return r;
}

std::strong_ordering operator<=>(const Mat2& x, const Mat2& y) {
  if (auto c = x.n_ <=> y.n_; c != 0) return c;
  return x.e_ <=> y.e_;
}

Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y * x.inverse() * y.inverse(); }

std::vector<Mat2> crt_split(const Mat2& m) {
  std::vector<Mat2> out;
  for (const auto& pp : factorize(m.modulus())) out.push_back(m.reduce(pp.value()));
  return out;
}

Mat2 crt_join(std::span<const Mat2> parts) {
  if (parts.empty()) throw InputError("crt_join: no components");
  // Fold pairwise: x = x1 (mod n1), x = x2 (mod n2).
  std::uint64_t n = parts[0].modulus();
  std::array<std::uint64_t, 4> acc{parts[0].a(), parts[0].b(), parts[0].c(), parts[0].d()};
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::uint64_t m = parts[i].modulus();
    if (std::gcd(n, m) != 1)
      throw InputError("crt_join: moduli " + std::to_string(n) + " and " + std::to_string(m) +
                       " are not coprime");
    if (n * m > (1ull << 31)) throw InputError("crt_join: modulus too large");
    const std::uint64_t n_inv = *inverse_mod(static_cast<std::uint32_t>(n % m), static_cast<std::uint32_t>(m));
    for (int k = 0; k < 4; ++k) {
      const std::uint64_t target = parts[i].entries()[k];
      const std::uint64_t t = (target + m - acc[k] % m) % m * n_inv % m;
      acc[k] = acc[k] + n * t;
    }
    n *= m;
  }
  return Mat2(static_cast<std::uint32_t>(n), acc[0], acc[1], acc[2], acc[3]);
}

std::vector<Mat2> sl2_generators(std::uint32_t n) {
  return {Mat2(n, 1, 1, 0, 1), Mat2(n, 1, 0, 1, 1)};
}

std::vector<Mat2> gl2_generators(std::uint32_t n) {
  auto gens = sl2_generators(n);
  for (std::uint32_t u : unit_group_generators(n)) gens.push_back(Mat2(n, u, 0, 0, 1));
  return gens;
}

std::vector<Mat2> all_gl2(std::uint32_t n) {
  std::vector<Mat2> out;
  out.reserve(gl2_order(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d) {
          Mat2 m(n, a, b, c, d);
          if (m.is_invertible()) out.push_back(m);
        }
  return out;
}

Mat2 lift(const Mat2& m, std::uint32_t n) {
  const std::uint32_t k = m.modulus();
  if (n % k != 0)
    throw InputError("cannot lift from modulus " + std::to_string(k) + " to " + std::to_string(n));
  std::uint32_t n1 = 1;
  for (const auto& pp : factorize(n))
    if (k % pp.p == 0) n1 *= pp.value();
  const std::uint32_t n2 = n / n1;
  const Mat2 near(n1, m.a(), m.b(), m.c(), m.d());
  if (n2 == 1) return near;
  const Mat2 parts[] = {near, Mat2::identity(n2)};
  return crt_join(parts);
}

}  // namespace modfib
