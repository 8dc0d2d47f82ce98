#include "modfib/closures.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <absl/container/flat_hash_map.h>

#include "modfib/arith.hpp"
#include "modfib/errors.hpp"

namespace modfib {

namespace {

constexpr std::uint64_t kGeneratorSeed = 0x6d6f6466u;

// Elements of the cosets in `cosets`, kept when `keep` accepts them.
template <class Keep>
std::vector<Mat2> collect(const CosetTable& table, const std::vector<std::uint32_t>& cosets, Keep keep) {
  std::vector<Mat2> out;
  table.for_each_subgroup_element([&](const Mat2& h) {
    for (std::uint32_t i : cosets) {
      const Mat2 x = h * table.representatives()[i];
      if (keep(x)) out.push_back(x);
    }
  });
  return out;
}

ClosureResult finish(ClosureKind kind, std::uint32_t n, const std::vector<Mat2>& elements,
                     OrbitPartition partition) {
  ClosureResult r;
  r.kind = kind;
  r.closure = generating_set(n, elements);
  r.order = elements.size();
  r.index = gl2_order(n) / r.order;
  r.partition = std::move(partition);
  return r;
}

}  // namespace

SubgroupSpec generating_set(std::uint32_t n, const std::vector<Mat2>& elements) {
  std::vector<Mat2> pool = elements;
  std::mt19937_64 rng(kGeneratorSeed);
  std::shuffle(pool.begin(), pool.end(), rng);
  ElementSet acc(n, elements.size());
  try {
    for (const Mat2& x : pool) {
      if (acc.size() == elements.size()) break;
      acc.adjoin(x);
    }
  } catch (const CapExceeded&) {
    throw ConsistencyError("closure candidates do not form a group");
  }
  if (acc.size() != elements.size()) throw ConsistencyError("closure candidates do not form a group");
  std::vector<Mat2> gens = acc.generators();
  for (std::size_t i = gens.size(); i-- > 0;) {
    ElementSet trial(n, elements.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) trial.adjoin(gens[j]);
    if (trial.size() == elements.size()) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return SubgroupSpec{n, gens, std::nullopt};
}

OrbitPartition partition_under(const CosetTable& table, const SubgroupSpec& g) {
  const auto actors = actors_at(g, table.modulus());
  return orbits(table, actors);
}

bool h_equivalent(const CosetTable& table, const SubgroupSpec& x, const SubgroupSpec& y) {
  const auto ax = actors_at(x, table.modulus());
  const auto ay = actors_at(y, table.modulus());
  return orbit_of_identity(table, ax) == orbit_of_identity(table, ay);
}

bool ch_equivalent(const CosetTable& table, const SubgroupSpec& x, const SubgroupSpec& y) {
  return partition_under(table, x) == partition_under(table, y);
}

ClosureResult h_closure(const CosetTable& table, const SubgroupSpec& g) {
  OrbitPartition part = partition_under(table, g);
  const auto& omega = part.identity_block();
  const auto& block = part.block_of;
  const auto& reps = table.representatives();
  auto keep = [&](const Mat2& x) {
    return std::all_of(omega.begin(), omega.end(),
                       [&](std::uint32_t j) { return block[table.identify(reps[j] * x)] == 0; });
  };
  const auto elements = collect(table, omega, keep);
  return finish(ClosureKind::H, table.modulus(), elements, std::move(part));
}

ClosureResult ch_closure(const CosetTable& table, const SubgroupSpec& g) {
  OrbitPartition part = partition_under(table, g);
  const auto& block = part.block_of;
  const auto& reps = table.representatives();
  auto keep = [&](const Mat2& x) {
    for (std::uint32_t j = 0; j < reps.size(); ++j)
      if (block[table.identify(reps[j] * x)] != block[j]) return false;
    return true;
  };
  const auto elements = collect(table, part.identity_block(), keep);
  return finish(ClosureKind::CH, table.modulus(), elements, std::move(part));
}

bool ch_closed(const CosetTable& table, const SubgroupSpec& g, std::uint64_t cap) {
  const ClosureResult c = ch_closure(table, g);
  return Subgroup::enumerate(g, cap).index() == c.index;
}

Subgroup brute_force_ch_closure(const StandardFamily& family, const SubgroupSpec& g) {
  const std::uint32_t n = family.level;
  if (gl2_order(n) > 100000)
    throw CapExceeded("brute-force closure limited to |GL2| <= 1e5", 0);
  const std::vector<Mat2> all = all_gl2(n);
  absl::flat_hash_map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < all.size(); ++i) pos[all[i].key()] = i;

  const SubgroupSpec gn{n, actors_at(g, n), std::nullopt};
  const std::vector<Mat2> g_elems = Subgroup::enumerate(gn).elements();
  const std::vector<Mat2> h_elems = Subgroup::enumerate(family.spec()).elements();

  // Elements of GL_2 that lie in x^-1 H x G for every x.
  std::vector<char> allowed(all.size(), 1);
  std::vector<char> seen(all.size());
  std::set<std::vector<std::uint64_t>> conjugates_done;
  for (const Mat2& x : all) {
    const Mat2 xi = x.inverse();
    std::vector<std::uint64_t> conj;
    for (const Mat2& h : h_elems) conj.push_back((xi * h * x).key());
    std::sort(conj.begin(), conj.end());
    if (!conjugates_done.insert(conj).second) continue;
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint64_t c : conj) {
      const Mat2 cm = Mat2::from_key(n, c);
      for (const Mat2& y : g_elems) seen[pos[(cm * y).key()]] = 1;
    }
    for (std::size_t i = 0; i < all.size(); ++i) allowed[i] &= seen[i];
  }

  std::vector<Mat2> gens = gn.generators;
  ElementSet k(n, all.size());
  for (const Mat2& s : gens) k.adjoin(s);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!allowed[i] || k.contains(all[i])) continue;
      ElementSet trial = k;
      trial.adjoin(all[i]);
      const bool inside = std::all_of(trial.keys().begin(), trial.keys().end(),
                                      [&](std::uint64_t key) { return allowed[pos[key]] != 0; });
      if (inside) {
        k = std::move(trial);
        grew = true;
      }
    }
  }
  return Subgroup::enumerate(SubgroupSpec{n, k.generators(), std::nullopt});
}

}  // namespace modfib
