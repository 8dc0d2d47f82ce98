#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modfib/element_set.hpp"
#include "modfib/zmod_gl2.hpp"

namespace modfib {

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 25;

// A subgroup of GL_2(Z/n) given by generators.  Read as an open subgroup of
// GL_2(Zhat): the full preimage of the generated group.
struct SubgroupSpec {
  std::uint32_t modulus = 1;
  std::vector<Mat2> generators;
  std::optional<std::string> label;
};

// Checks moduli and invertibility; throws ModulusMismatch / NonInvertible.
SubgroupSpec make_spec(std::uint32_t n, std::vector<Mat2> generators,
                       std::optional<std::string> label = std::nullopt);
void validate(const SubgroupSpec& spec);

SubgroupSpec reduce(const SubgroupSpec& spec, std::uint32_t m);
// The same open subgroup presented at a multiple n of its modulus.
SubgroupSpec saturate(const SubgroupSpec& spec, std::uint32_t n);
SubgroupSpec adjoin_minus_identity(const SubgroupSpec& spec);
SubgroupSpec conjugate(const SubgroupSpec& spec, const Mat2& g);  // g G g^-1
SubgroupSpec full_gl2(std::uint32_t n);
SubgroupSpec full_sl2(std::uint32_t n);

// Generators of the kernel of GL_2(Z/n) -> GL_2(Z/m).
std::vector<Mat2> kernel_generators(std::uint32_t n, std::uint32_t m);
// The factor GL_2(Z/p^e) of GL_2(Z/n) embedded with identity elsewhere.
std::vector<Mat2> local_factor_generators(std::uint32_t n, std::uint32_t p);

// An enumerated subgroup.  Stored as its intersection with SL_2 together
// with one lift of every determinant, so |G| = |G cap SL_2| * |det G|.
// Immutable once built; copies share storage.
class Subgroup {
 public:
  static Subgroup enumerate(const SubgroupSpec& spec, std::uint64_t cap = kDefaultCap);

  const SubgroupSpec& spec() const { return spec_; }
  std::uint32_t modulus() const { return spec_.modulus; }
  std::uint64_t order() const { return sl_->size() * det_image_.size(); }
  std::uint64_t index() const;  // in GL_2(Z/n)
  std::uint64_t sl_order() const { return sl_->size(); }
  const ElementSet& sl_part() const { return *sl_; }

  bool contains(const Mat2& m) const;
  bool contains_minus_identity() const;
  const std::vector<std::uint32_t>& det_image() const { return det_image_; }
  bool is_full_det() const;

  // Every element; throws CapExceeded when there are more than cap.
  std::vector<Mat2> elements(std::uint64_t cap = kDefaultCap) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint32_t u : det_image_) {
      const Mat2& t = lift_[u];
      for (std::size_t i = 0; i < sl_->size(); ++i) f(sl_->at(i) * t);
    }
  }

 private:
  friend Subgroup intersect_sl2(const Subgroup& g);

  SubgroupSpec spec_;
  std::shared_ptr<const ElementSet> sl_;
  std::vector<std::uint32_t> det_image_;
  std::vector<char> in_image_;     // indexed by residue
  std::vector<Mat2> lift_;         // element of G with the given determinant
  std::vector<Mat2> lift_inverse_;
};

// Index of G cap SL_2 in SL_2(Z/n).
std::uint64_t sl_index(const Subgroup& g);

// Least d | n with G the full preimage of its image mod d.
std::uint32_t gl_level(const Subgroup& g, std::uint64_t cap = kDefaultCap);
// Least d | n with G cap SL_2 the full preimage of its image in SL_2(Z/d).
std::uint32_t sl_level(const Subgroup& g, std::uint64_t cap = kDefaultCap);

// G cap SL_2 as a subgroup in its own right.
Subgroup intersect_sl2(const Subgroup& g);

// Equality as subsets of GL_2(Z/n) for groups at the same modulus.
bool same_group(const Subgroup& x, const Subgroup& y);

// Equality as open subgroups, allowing different moduli.
bool same_open_subgroup(const SubgroupSpec& x, const SubgroupSpec& y, std::uint64_t cap = kDefaultCap);

// Histogram of element orders.
std::map<std::uint64_t, std::uint64_t> order_histogram(const Subgroup& g);

// Some h with h y h^-1 = x, if one exists.  Searches GL_2(Z/n) outright, so
// throws CapExceeded when |GL_2(Z/n)| exceeds search_cap.
std::optional<Mat2> find_conjugator(const Subgroup& x, const Subgroup& y,
                                    std::uint64_t search_cap = std::uint64_t{1} << 24);

// [G, G]: normal closure of the commutators of generator pairs.
Subgroup commutator_subgroup(const Subgroup& g, std::uint64_t cap = kDefaultCap);

struct AgreeableClosure {
  SubgroupSpec closure;
  std::uint32_t working_modulus = 1;
  std::uint32_t commutator_sl_level = 1;
  std::vector<std::uint32_t> commutator_primes;
};

// Adjoins scalars and the full local factor at every prime of n not
// dividing the SL-level of [G, G].
AgreeableClosure agreeable_closure(const Subgroup& g, std::uint64_t cap = kDefaultCap);

}  // namespace modfib
