#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modfib/subgroups.hpp"
#include "modfib/zmod_gl2.hpp"

namespace modfib {

// B0: c = 0.  B1: c = 0 and a = +-1.  B1Strict: c = 0 and a = 1.
enum class FamilyKind { B0, B1, B1Strict };

struct StandardFamily {
  FamilyKind kind = FamilyKind::B0;
  std::uint32_t level = 1;

  bool contains(const Mat2& m) const;  // m must be mod level
  std::uint64_t index() const;         // closed-form index in GL_2
  SubgroupSpec spec() const;
  std::string name() const;            // e.g. "B0(7)"
};

enum class Ambient { GL2, SL2 };

// The right cosets H\A of H in A = GL_2(Z/n) or SL_2(Z/n), A acting by
// right multiplication.  Coset 0 is H itself.
class CosetTable {
 public:
  static CosetTable for_family(const StandardFamily& family);
  // Arbitrary H; cosets identified by membership tests.
  static CosetTable for_subgroup(const Subgroup& h, Ambient ambient = Ambient::GL2);

  std::uint32_t modulus() const { return n_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<Mat2>& representatives() const { return reps_; }
  const std::optional<StandardFamily>& family() const { return family_; }

  // The coset H m.
  std::uint32_t identify(const Mat2& m) const;
  // Image of every coset under right multiplication by g.
  std::vector<std::uint32_t> action(const Mat2& g) const;

  // Calls f on every element of H.
  void for_each_subgroup_element(const std::function<void(const Mat2&)>& f) const;

  struct Identifier;

 private:
  std::uint32_t n_ = 1;
  std::vector<Mat2> reps_;
  std::optional<StandardFamily> family_;
  std::shared_ptr<const Identifier> id_;
};

// Partition of the cosets into orbits.  Blocks are numbered by their least
// coset; block 0 contains coset 0.
struct OrbitPartition {
  std::vector<std::uint32_t> block_of;
  std::vector<std::vector<std::uint32_t>> blocks;

  std::vector<std::uint64_t> sorted_sizes() const;
  const std::vector<std::uint32_t>& identity_block() const { return blocks.front(); }
  bool operator==(const OrbitPartition&) const = default;
};

// Orbits of the group generated by actors (reduced to the table modulus).
OrbitPartition orbits(const CosetTable& table, std::span<const Mat2> actors);
std::vector<std::uint32_t> orbit_of_identity(const CosetTable& table, std::span<const Mat2> actors);

// Brings generators to the table modulus, reducing when it divides theirs.
std::vector<Mat2> actors_at(const SubgroupSpec& g, std::uint32_t n);

}  // namespace modfib
