#pragma once

#include <cstdint>
#include <vector>

#include <absl/container/flat_hash_set.h>

#include "modfib/zmod_gl2.hpp"

namespace modfib {

// The elements of a finite matrix group mod n, stored as packed keys and
// grown one generator at a time with Dimino's coset method.
class ElementSet {
 public:
  ElementSet(std::uint32_t modulus, std::uint64_t cap);  // starts as {I}

  std::uint32_t modulus() const { return n_; }
  std::size_t size() const { return keys_.size(); }
  bool contains(const Mat2& m) const;
  bool contains_key(std::uint64_t key) const { return set_.contains(key); }
  const std::vector<std::uint64_t>& keys() const { return keys_; }
  Mat2 at(std::size_t i) const { return Mat2::from_key(n_, keys_[i]); }

  // Replaces the set by the group generated by it and g.  Returns whether
  // it grew.  Throws CapExceeded once the size would pass the cap.
  bool adjoin(const Mat2& g);

  // The adjoined elements that enlarged the set, in order.
  const std::vector<Mat2>& generators() const { return gens_; }

 private:
  void add_coset(std::size_t old_size, const Mat2& x);

  std::uint32_t n_;
  std::uint64_t cap_;
  std::vector<std::uint64_t> keys_;
  absl::flat_hash_set<std::uint64_t> set_;
  std::vector<Mat2> gens_;
};

}  // namespace modfib
