#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace modfib {

// An element of Z/n.  Moduli are limited to 2^31 so products fit in 64 bits.
class Residue {
 public:
  Residue(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_unit() const;
  Residue inverse() const;  // throws NonInvertible

  friend Residue operator+(Residue x, Residue y);
  friend Residue operator-(Residue x, Residue y);
  friend Residue operator*(Residue x, Residue y);
  friend bool operator==(Residue x, Residue y) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

// A 2x2 matrix [[a, b], [c, d]] over Z/n acting on column vectors.
// Entries are always stored reduced to [0, n).
class Mat2 {
 public:
  Mat2() = default;  // identity mod 1
  Mat2(std::uint32_t modulus, std::int64_t a, std::int64_t b, std::int64_t c,
       std::int64_t d);

  static Mat2 identity(std::uint32_t modulus);
  static Mat2 scalar(std::uint32_t modulus, std::int64_t lambda);
  static Mat2 from_key(std::uint32_t modulus, std::uint64_t key);

  std::uint32_t modulus() const { return n_; }
  std::uint32_t a() const { return e_[0]; }
  std::uint32_t b() const { return e_[1]; }
  std::uint32_t c() const { return e_[2]; }
  std::uint32_t d() const { return e_[3]; }
  const std::array<std::uint32_t, 4>& entries() const { return e_; }

  std::uint32_t det() const;
  std::uint32_t trace() const;
  bool is_invertible() const;
  bool is_identity() const;
  Mat2 inverse() const;  // throws NonInvertible
  Mat2 reduce(std::uint32_t m) const;  // throws InputError unless m | n
  Mat2 pow(std::uint64_t k) const;
  std::uint64_t order() const;  // multiplicative order; requires invertible

  // Injective packing of the entries; requires n <= 2^16.
  std::uint64_t key() const;

  std::string to_string() const;  // "[a,b,c,d]"

  friend Mat2 operator*(const Mat2& x, const Mat2& y);  // throws ModulusMismatch
  friend bool operator==(const Mat2&, const Mat2&) = default;
  // Lexicographic on (n, a, b, c, d).
  friend std::strong_ordering operator<=>(const Mat2& x, const Mat2& y);

 private:
  std::uint32_t n_ = 1;
  std::array<std::uint32_t, 4> e_{0, 0, 0, 0};
};

// Largest modulus the packed-key representation supports.
inline constexpr std::uint32_t kMaxKeyModulus = 65536;

Mat2 commutator(const Mat2& x, const Mat2& y);  // x y x^-1 y^-1

// Splits A into its components modulo the prime powers of n (ascending p).
std::vector<Mat2> crt_split(const Mat2& m);
// Inverse of crt_split for pairwise coprime moduli.
Mat2 crt_join(std::span<const Mat2> parts);

// Standard generators: T = [[1,1],[0,1]], U = [[1,0],[1,1]].
std::vector<Mat2> sl2_generators(std::uint32_t n);
// T, U and diag(u, 1) for generators u of (Z/n)^*.
std::vector<Mat2> gl2_generators(std::uint32_t n);

// Every element of GL_2(Z/n) in lexicographic order (small n only).
std::vector<Mat2> all_gl2(std::uint32_t n);

// Lift of A mod m to modulus n (m | n), invertible when A is: components at
// primes not dividing m are the identity.
Mat2 lift(const Mat2& m, std::uint32_t n);

}  // namespace modfib
