#include "modfib/element_set.hpp"

#include <string>

#include "modfib/errors.hpp"

namespace modfib {

ElementSet::ElementSet(std::uint32_t modulus, std::uint64_t cap) : n_(modulus), cap_(cap) {
  if (modulus > kMaxKeyModulus)
    throw InputError("enumeration supports moduli up to " + std::to_string(kMaxKeyModulus));
  const Mat2 id = Mat2::identity(modulus);
  keys_.push_back(id.key());
  set_.insert(id.key());
}

bool ElementSet::contains(const Mat2& m) const {
  if (m.modulus() != n_)
    throw ModulusMismatch("element mod " + std::to_string(m.modulus()) + " tested against group mod " +
                          std::to_string(n_));
  return set_.contains(m.key());
}

void ElementSet::add_coset(std::size_t old_size, const Mat2& x) {
  if (keys_.size() + old_size > cap_)
    throw CapExceeded("group enumeration exceeded cap of " + std::to_string(cap_) + " elements",
                      keys_.size());
  const std::uint64_t n = n_;
  const std::uint64_t xa = x.a(), xb = x.b(), xc = x.c(), xd = x.d();
  for (std::size_t i = 0; i < old_size; ++i) {
    const std::uint64_t k = keys_[i];
    const std::uint64_t a = k >> 48, b = (k >> 32) & 0xffff, c = (k >> 16) & 0xffff, d = k & 0xffff;
    const std::uint64_t key = ((a * xa + b * xc) % n << 48) | ((a * xb + b * xd) % n << 32) |
                              ((c * xa + d * xc) % n << 16) | ((c * xb + d * xd) % n);
    keys_.push_back(key);
    set_.insert(key);
  }
}

bool ElementSet::adjoin(const Mat2& g) {
  if (contains(g)) return false;
  const std::size_t old_size = keys_.size();
  gens_.push_back(g);
  std::vector<Mat2> reps{Mat2::identity(n_), g};
  add_coset(old_size, g);
  for (std::size_t r = 1; r < reps.size(); ++r) {
    for (const Mat2& s : gens_) {
      const Mat2 x = reps[r] * s;
      if (set_.contains(x.key())) continue;
      reps.push_back(x);
      add_coset(old_size, x);
    }
  }
  return true;
}

}  // namespace modfib
