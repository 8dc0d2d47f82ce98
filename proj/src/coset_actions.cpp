#include "modfib/coset_actions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "modfib/arith.hpp"
#include "modfib/errors.hpp"

namespace modfib {

bool StandardFamily::contains(const Mat2& m) const {
  if (m.modulus() != level)
    throw ModulusMismatch("family " + name() + " tested against a matrix mod " +
                          std::to_string(m.modulus()));
  if (m.c() != 0) return false;
  switch (kind) {
    case FamilyKind::B0:
      return true;
    case FamilyKind::B1:
      return m.a() == 1 % level || m.a() == level - 1;
    case FamilyKind::B1Strict:
      return m.a() == 1 % level;
  }
  return false;
}

std::uint64_t StandardFamily::index() const {
  const std::uint64_t psi = dedekind_psi(level);
  switch (kind) {
    case FamilyKind::B0:
      return psi;
    case FamilyKind::B1:
      return level <= 2 ? psi : psi * euler_phi(level) / 2;
    case FamilyKind::B1Strict:
      return psi * euler_phi(level);
  }
  return 0;
}

SubgroupSpec StandardFamily::spec() const {
  const std::uint32_t n = level;
  SubgroupSpec s{n, {Mat2(n, 1, 1, 0, 1)}, std::nullopt};
  for (std::uint32_t u : unit_group_generators(n)) {
    s.generators.push_back(Mat2(n, 1, 0, 0, u));
    if (kind == FamilyKind::B0) s.generators.push_back(Mat2(n, u, 0, 0, 1));
  }
  if (kind == FamilyKind::B1) s.generators.push_back(Mat2::scalar(n, -1));
  return s;
}

std::string StandardFamily::name() const {
  const char* base = kind == FamilyKind::B0 ? "B0" : kind == FamilyKind::B1 ? "B1" : "B1'";
  return std::string(base) + "(" + std::to_string(level) + ")";
}

struct CosetTable::Identifier {
  virtual ~Identifier() = default;
  // Coset id of H m, or -1 if m lies in none of the cosets found so far.
  virtual std::int64_t lookup(const Mat2& m) const = 0;
  virtual void record(const Mat2& rep, std::uint32_t id) = 0;
  virtual void for_each_element(const std::function<void(const Mat2&)>& f) const = 0;
};

namespace {

// Right cosets of B0 / B1 / B1' are determined by the bottom row up to
// scaling plus, for B1 and B1', a normalised determinant.
class FamilyIdentifier final : public CosetTable::Identifier {
 public:
  explicit FamilyIdentifier(const StandardFamily& f) : f_(f), n_(f.level) {
    const std::size_t nn = std::size_t{n_} * n_;
    point_.assign(nn, -1);
    scale_.assign(nn, 0);
    const auto units = units_mod(n_);
    for (std::uint32_t c = 0; c < n_; ++c)
      for (std::uint32_t d = 0; d < n_; ++d) {
        if (std::gcd(std::gcd(c, d), n_) != 1 || point_[c * n_ + d] >= 0) continue;
        // (c, d) is the lexicographically least vector of its class.
        for (std::uint32_t u : units) {
          const std::size_t at = std::uint64_t{u} * c % n_ * n_ + std::uint64_t{u} * d % n_;
          point_[at] = points_;
          scale_[at] = *inverse_mod(u, n_);
        }
        ++points_;
      }
    const std::size_t width = f.kind == FamilyKind::B0 ? 1 : n_;
    coset_.assign(points_ * width, -1);
  }

  std::int64_t lookup(const Mat2& m) const override { return coset_[key(m)]; }
  void record(const Mat2& rep, std::uint32_t id) override { coset_[key(rep)] = id; }

  void for_each_element(const std::function<void(const Mat2&)>& f) const override {
    const auto units = units_mod(n_);
    std::vector<std::uint32_t> tops;
    if (f_.kind == FamilyKind::B0) tops = units;
    else if (f_.kind == FamilyKind::B1 && n_ > 2) tops = {1, n_ - 1};
    else tops = {1 % n_};
    for (std::uint32_t a : tops)
      for (std::uint32_t b = 0; b < n_; ++b)
        for (std::uint32_t d : units) f(Mat2(n_, a, b, 0, d));
  }

 private:
  std::size_t key(const Mat2& m) const {
    if (m.modulus() != n_)
      throw ModulusMismatch("coset lookup mod " + std::to_string(n_) + " given a matrix mod " +
                            std::to_string(m.modulus()));
    const std::size_t at = std::size_t{m.c()} * n_ + m.d();
    const std::int64_t p = point_[at];
    if (p < 0) throw NonInvertible("matrix " + m.to_string() + " is not invertible");
    if (f_.kind == FamilyKind::B0) return static_cast<std::size_t>(p);
    std::uint32_t delta = static_cast<std::uint32_t>(std::uint64_t{scale_[at]} * m.det() % n_);
    if (f_.kind == FamilyKind::B1) delta = std::min(delta, (n_ - delta) % n_);
    return static_cast<std::size_t>(p) * n_ + delta;
  }

  StandardFamily f_;
  std::uint32_t n_;
  std::int64_t points_ = 0;
  std::vector<std::int64_t> point_;
  std::vector<std::uint32_t> scale_;
  std::vector<std::int64_t> coset_;
};

class SearchIdentifier final : public CosetTable::Identifier {
 public:
  explicit SearchIdentifier(Subgroup h) : h_(std::move(h)) {}

  std::int64_t lookup(const Mat2& m) const override {
    for (std::size_t i = 0; i < rep_inverses_.size(); ++i)
      if (h_.contains(m * rep_inverses_[i])) return static_cast<std::int64_t>(i);
    return -1;
  }
  void record(const Mat2& rep, std::uint32_t) override { rep_inverses_.push_back(rep.inverse()); }
  void for_each_element(const std::function<void(const Mat2&)>& f) const override { h_.for_each(f); }

 private:
  Subgroup h_;
  std::vector<Mat2> rep_inverses_;
};

std::vector<Mat2> build(CosetTable::Identifier& id, std::uint32_t n, const std::vector<Mat2>& gens,
                        std::uint64_t expected) {
  std::vector<Mat2> reps{Mat2::identity(n)};
  id.record(reps[0], 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const Mat2& s : gens) {
      const Mat2 x = reps[i] * s;
      if (id.lookup(x) >= 0) continue;
      if (reps.size() >= expected)
        throw ConsistencyError("coset enumeration found more than " + std::to_string(expected) +
                               " cosets");
      id.record(x, static_cast<std::uint32_t>(reps.size()));
      reps.push_back(x);
    }
  }
  if (reps.size() != expected)
    throw ConsistencyError("coset enumeration found " + std::to_string(reps.size()) +
                           " cosets, expected " + std::to_string(expected));
  return reps;
}

}  // namespace

CosetTable CosetTable::for_family(const StandardFamily& family) {
  CosetTable t;
  t.n_ = family.level;
  t.family_ = family;
  auto id = std::make_shared<FamilyIdentifier>(family);
  t.reps_ = build(*id, t.n_, gl2_generators(t.n_), family.index());
  t.id_ = std::move(id);
  return t;
}

CosetTable CosetTable::for_subgroup(const Subgroup& h, Ambient ambient) {
  CosetTable t;
  t.n_ = h.modulus();
  const bool gl = ambient == Ambient::GL2;
  if (!gl && h.det_image().size() != 1)
    throw InputError("subgroup is not contained in SL2");
  const std::uint64_t expected =
      gl ? gl2_order(t.n_) / h.order() : sl2_order(t.n_) / h.sl_order();
  auto id = std::make_shared<SearchIdentifier>(h);
  t.reps_ = build(*id, t.n_, gl ? gl2_generators(t.n_) : sl2_generators(t.n_), expected);
  t.id_ = std::move(id);
  return t;
}

std::uint32_t CosetTable::identify(const Mat2& m) const {
  const std::int64_t i = id_->lookup(m);
  if (i < 0) throw ConsistencyError("matrix " + m.to_string() + " lies in no known coset");
  return static_cast<std::uint32_t>(i);
}

std::vector<std::uint32_t> CosetTable::action(const Mat2& g) const {
  std::vector<std::uint32_t> out(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) out[i] = identify(reps_[i] * g);
  return out;
}

void CosetTable::for_each_subgroup_element(const std::function<void(const Mat2&)>& f) const {
  id_->for_each_element(f);
}

std::vector<std::uint64_t> OrbitPartition::sorted_sizes() const {
  std::vector<std::uint64_t> out;
  for (const auto& b : blocks) out.push_back(b.size());
  std::sort(out.begin(), out.end());
  return out;
}

OrbitPartition orbits(const CosetTable& table, std::span<const Mat2> actors) {
  const std::size_t k = table.size();
  std::vector<std::uint32_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Mat2& g : actors) {
    const auto perm = table.action(g);
    for (std::uint32_t i = 0; i < k; ++i) {
      const std::uint32_t a = find(i), b = find(perm[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitPartition out;
  out.block_of.assign(k, 0);
  std::vector<std::int64_t> block_of_root(k, -1);
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t r = find(i);
    if (block_of_root[r] < 0) {
      block_of_root[r] = static_cast<std::int64_t>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.block_of[i] = static_cast<std::uint32_t>(block_of_root[r]);
    out.blocks[out.block_of[i]].push_back(i);
  }
  return out;
}

std::vector<std::uint32_t> orbit_of_identity(const CosetTable& table, std::span<const Mat2> actors) {
  std::vector<char> seen(table.size(), 0);
  std::vector<std::uint32_t> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const Mat2& g : actors) {
      const std::uint32_t j = table.identify(table.representatives()[out[i]] * g);
      if (!seen[j]) {
        seen[j] = 1;
        out.push_back(j);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mat2> actors_at(const SubgroupSpec& g, std::uint32_t n) {
  const SubgroupSpec s = g.modulus % n == 0 ? g : saturate(g, std::lcm(g.modulus, n));
  return reduce(s, n).generators;
}

}  // namespace modfib
