#include "modfib/modular_invariants.hpp"

#include <charconv>

#include "modfib/arith.hpp"
#include "modfib/coset_actions.hpp"
#include "modfib/errors.hpp"

namespace modfib {

namespace {

std::uint64_t degree(FamilyKind kind, std::uint32_t n, std::uint32_t m) {
  if (m == 0 || n % m != 0)
    throw InputError(std::to_string(m) + " does not divide " + std::to_string(n));
  const StandardFamily top{kind, n}, bottom{kind, m};
  const std::uint64_t counted = CosetTable::for_family(top).size();
  const std::uint64_t below = CosetTable::for_family(bottom).size();
  if (counted != top.index() || below != bottom.index() || counted % below != 0)
    throw ConsistencyError("coset count disagrees with the index formula for " + top.name());
  return counted / below;
}

std::uint64_t fixed_cosets(const CosetTable& t, const Mat2& g) {
  const auto perm = t.action(g);
  std::uint64_t k = 0;
  for (std::uint32_t i = 0; i < perm.size(); ++i) k += perm[i] == i;
  return k;
}

}  // namespace

std::uint64_t deg_x0(std::uint32_t n, std::uint32_t m) { return degree(FamilyKind::B0, n, m); }
std::uint64_t deg_x1(std::uint32_t n, std::uint32_t m) { return degree(FamilyKind::B1, n, m); }

GenusData genus_data(const Subgroup& g, std::uint64_t cap) {
  const std::uint32_t n = g.modulus();
  std::vector<Mat2> gens = g.sl_part().generators();
  gens.push_back(Mat2::scalar(n, -1));
  const Subgroup pm = Subgroup::enumerate(SubgroupSpec{n, gens, std::nullopt}, cap);

  GenusData out;
  out.sl_level = sl_level(pm, cap);
  const std::uint32_t m = out.sl_level;
  const Subgroup h = Subgroup::enumerate(reduce(pm.spec(), m), cap);
  const CosetTable t = CosetTable::for_subgroup(h, Ambient::SL2);

  out.index = t.size();
  out.e2 = fixed_cosets(t, Mat2(m, 0, -1, 1, 0));
  out.e3 = fixed_cosets(t, Mat2(m, 0, -1, 1, -1));
  const Mat2 tm(m, 1, 1, 0, 1);
  out.cusps = orbits(t, std::span<const Mat2>(&tm, 1)).blocks.size();

  const std::int64_t num = static_cast<std::int64_t>(out.index) - 3 * static_cast<std::int64_t>(out.e2) -
                           4 * static_cast<std::int64_t>(out.e3) - 6 * static_cast<std::int64_t>(out.cusps);
  if (num % 12 != 0)
    throw ConsistencyError("genus formula is not integral: i=" + std::to_string(out.index) +
                           " e2=" + std::to_string(out.e2) + " e3=" + std::to_string(out.e3) +
                           " cusps=" + std::to_string(out.cusps));
  out.genus = 1 + num / 12;
  return out;
}

std::string LabelInvariants::prefix() const {
  return std::to_string(level) + "." + std::to_string(index) + "." + std::to_string(genus);
}

LabelInvariants label_invariants(const Subgroup& g, std::uint64_t cap) {
  LabelInvariants out;
  out.level = gl_level(g, cap);
  out.index = g.index();
  out.genus = genus_data(g, cap).genus;
  return out;
}

LabelInvariants parse_label(const std::string& label) {
  LabelInvariants out;
  std::size_t pos = 0;
  auto number = [&](auto& dst) {
    const std::size_t end = label.find('.', pos);
    if (end == std::string::npos) throw ParseError("malformed label '" + label + "'");
    const char* first = label.data() + pos;
    const char* last = label.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, dst);
    if (ec != std::errc() || ptr != last || first == last)
      throw ParseError("malformed label '" + label + "'");
    pos = end + 1;
  };
  number(out.level);
  number(out.index);
  number(out.genus);
  if (pos >= label.size()) throw ParseError("malformed label '" + label + "'");
  return out;
}

}  // namespace modfib
