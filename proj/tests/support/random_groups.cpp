#include "random_groups.hpp"

namespace testing_support {

using modfib::Mat2;

Mat2 random_invertible(Rng& rng, std::uint32_t n) {
  std::uniform_int_distribution<std::int64_t> entry(0, n - 1);
  for (;;) {
    Mat2 m(n, entry(rng), entry(rng), entry(rng), entry(rng));
    if (m.is_invertible()) return m;
  }
}

Mat2 random_upper_triangular(Rng& rng, std::uint32_t n) {
  std::uniform_int_distribution<std::int64_t> entry(0, n - 1);
  for (;;) {
    Mat2 m(n, entry(rng), entry(rng), 0, entry(rng));
    if (m.is_invertible()) return m;
  }
}

modfib::SubgroupSpec random_subgroup(Rng& rng, std::uint32_t n) {
  std::uniform_int_distribution<int> count(1, 3), kind(0, 2);
  std::vector<Mat2> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i)
    gens.push_back(kind(rng) == 0 ? random_invertible(rng, n) : random_upper_triangular(rng, n));
  return modfib::make_spec(n, std::move(gens));
}

}  // namespace testing_support
