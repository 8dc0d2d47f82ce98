#include "modfib/tables.hpp"

#include <algorithm>

namespace modfib {

std::string curve_name(Curve c) { return c == Curve::X0 ? "x0" : "x1"; }

const std::vector<std::string>& cm_j_strings() {
  static const std::vector<std::string> values{
      "0",         "1728",       "-3375",         "8000",          "-32768",
      "54000",     "287496",     "-884736",       "-12288000",     "16581375",
      "-884736000", "-147197952000", "-262537412640768000",
  };
  return values;
}

namespace {

using Degrees = std::vector<std::uint64_t>;

std::vector<LevelDegrees> with_overrides(const std::vector<LevelDegrees>& base,
                                         const std::vector<LevelDegrees>& extra,
                                         const std::vector<LevelDegrees>& replaced) {
  std::vector<LevelDegrees> out = base;
  auto slot = [&](std::uint32_t level) -> Degrees& {
    for (auto& e : out)
      if (e.level == level) return e.degrees;
    out.push_back({level, {}});
    return out.back().degrees;
  };
  for (const auto& e : extra) {
    Degrees& d = slot(e.level);
    d.insert(d.end(), e.degrees.begin(), e.degrees.end());
  }
  for (const auto& e : replaced) slot(e.level) = e.degrees;
  for (auto& e : out) {
    std::sort(e.degrees.begin(), e.degrees.end());
    e.degrees.erase(std::unique(e.degrees.begin(), e.degrees.end()), e.degrees.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.level < y.level; });
  return out;
}

}  // namespace

const std::vector<LevelDegrees>& infinite_level_degrees(Curve c) {
  // Unconditional X0 constants.
  static const std::vector<LevelDegrees> x0{
      {1, {1}},        {2, {1, 2}},        {3, {1, 2, 3}}, {4, {1, 3}},
      {5, {1, 2, 4, 5}}, {6, {1, 2}},      {7, {1, 2, 6, 7}}, {8, {1}},
      {9, {1, 2}},     {10, {1, 2, 5, 10}}, {12, {1, 3}},   {13, {1, 13}},
      {16, {1}},       {18, {1, 2, 4}},    {25, {1, 4}},
  };
  // Unconditional X1 constants.
  static const std::vector<LevelDegrees> x1{
      {1, {1}},
      {2, {1, 2}},
      {3, {1, 2, 3}},
      {4, {1, 3}},
      {5, {1, 2, 4, 5, 8, 10}},
      {6, {1, 2}},
      {7, {1, 3, 6, 7, 18, 21}},
      {8, {1, 2}},
      {9, {1, 3, 6}},
      {10, {1, 2, 4, 5, 10, 20}},
      {12, {1, 2, 3, 6}},
      {13, {2, 3, 6, 26, 39, 78}},
      {16, {2}},
      {18, {6, 12}},
      {25, {5, 10, 20, 40}},
  };
  return c == Curve::X0 ? x0 : x1;
}

const std::vector<LevelDegrees>& all_level_degrees(Curve c) {
  // Conditional X0 constants: additions to the unconditional sets, then
  // levels given outright.
  static const std::vector<LevelDegrees> x0 = with_overrides(
      infinite_level_degrees(Curve::X0), {{7, {3}}, {12, {9}}, {13, {6, 8}}},
      {{11, {1, 11}},
       {15, {1, 2, 3, 5, 10, 15}},
       {17, {1, 17}},
       {21, {1, 3, 7, 21}},
       {28, {3, 21}},
       {37, {1, 37}}});
  // Conditional X1 constants.
  static const std::vector<LevelDegrees> x1 = with_overrides(
      infinite_level_degrees(Curve::X1), {{7, {9}}, {12, {9, 18}}, {13, {36, 48}}},
      {{11, {5, 55}},
       {15, {2, 4, 6, 10, 12, 20, 30, 60}},
       {17, {4, 8, 68, 136}},
       {21, {3, 6, 9, 18, 21, 42, 63, 126}},
       {28, {9, 18, 63, 126}},
       {37, {6, 18, 222, 666}}});
  return c == Curve::X0 ? x0 : x1;
}

const std::vector<InfiniteClosureRow>& infinite_b0_closures() {
  // Table of the 44 B0-closed classes with infinitely many rational points.
  static const std::vector<InfiniteClosureRow> rows{
      {1, "1.1.0.a.1", {1}},
      {2, "2.6.0.a.1", {1, 1, 1}},
      {2, "2.3.0.a.1", {1, 2}},
      {3, "3.12.0.a.1", {1, 1, 2}},
      {3, "3.4.0.a.1", {1, 3}},
      {3, "3.6.0.b.1", {2, 2}},
      {4, "4.24.0.b.1", {1, 1, 1, 1, 2}},
      {4, "4.12.0.b.1", {1, 1, 2, 2}},
      {4, "4.24.0.c.1", {1, 1, 2, 2}},
      {4, "4.6.0.c.1", {1, 1, 4}},
      {4, "4.12.0.f.1", {2, 2, 2}},
      {4, "4.8.0.b.1", {3, 3}},
      {5, "5.30.0.a.1", {1, 1, 4}},
      {5, "5.6.0.a.1", {1, 5}},
      {5, "5.15.0.a.1", {2, 4}},
      {6, "6.24.0.a.1", {1, 1, 1, 3, 3, 3}},
      {6, "6.36.0.a.1", {1, 1, 2, 2, 2, 4}},
      {6, "6.12.0.a.1", {1, 2, 3, 6}},
      {6, "6.36.0.b.1", {2, 2, 2, 2, 4}},
      {6, "6.18.0.b.1", {2, 2, 4, 4}},
      {6, "6.24.0.c.1", {3, 3, 6}},
      {6, "6.18.0.c.1", {4, 4, 4}},
      {7, "7.8.0.a.1", {1, 7}},
      {7, "7.28.0.a.1", {2, 6}},
      {8, "8.24.0.q.1", {1, 1, 1, 1, 8}},
      {8, "8.24.0.i.1", {1, 1, 2, 4, 4}},
      {8, "8.12.0.n.1", {1, 1, 2, 8}},
      {8, "8.24.0.bf.1", {2, 2, 4, 4}},
      {8, "8.24.0.g.1", {2, 2, 4, 4}},
      {8, "8.12.0.r.1", {2, 2, 8}},
      {9, "9.12.0.a.1", {1, 2, 9}},
      {10, "10.18.0.a.1", {1, 2, 5, 10}},
      {10, "10.30.0.a.1", {6, 12}},
      {12, "12.24.0.g.1", {1, 1, 3, 3, 4, 12}},
      {12, "12.36.0.b.1", {2, 2, 4, 8, 8}},
      {12, "12.36.0.n.1", {4, 4, 8, 8}},
      {12, "12.18.0.c.1", {4, 4, 16}},
      {12, "12.24.0.o.1", {12, 12}},
      {13, "13.14.0.a.1", {1, 13}},
      {16, "16.24.0.g.1", {1, 1, 2, 4, 16}},
      {16, "16.24.0.i.1", {2, 2, 4, 16}},
      {18, "18.36.0.a.1", {1, 2, 2, 4, 9, 18}},
      {18, "18.24.0.c.1", {3, 6, 27}},
      {25, "25.30.0.a.1", {1, 4, 25}},
  };
  return rows;
}

const std::vector<FiniteClosureRow>& finite_closures(Curve c) {
  // Finite B0-closure table.  Composite j are printed factored; the decimal
  // forms are noted beside them.
  static const std::vector<FiniteClosureRow> x0{
      {Curve::X0, 7, "7.56.1.b.1", {"2268945/128"}, {2, 3, 3}},
      {Curve::X0, 11, "11.12.1.a.1", {"-121", "-24729001"}, {1, 11}},
      {Curve::X0, 12, "12.32.1.b.1", {"-35937/4", "109503/64"}, {3, 3, 9, 9}},
      {Curve::X0, 12, "12.48.1.q.1", {"3375/64"}, {6, 6, 12}},
      {Curve::X0,
       13,
       "13.91.3.a.1",
       {// -143*1040^3/3^13, 130*442^3/3^13, 12077*1957713745728^3/305^13
        "-160855552000/1594323", "11225615440/1594323",
        "90616364985637924505590372621162077487104/197650497353702094308570556640625"},
       {6, 8}},
      {Curve::X0, 15, "15.24.1.a.1", {"-25/2", "-121945/32", "46969655/32768", "-349938025/8"}, {1, 3, 5, 15}},
      {Curve::X0, 15, "15.36.1.b.1", {"1331/8", "-1680914269/32768"}, {2, 2, 10, 10}},
      {Curve::X0, 17, "17.18.1.a.1", {"-297756989/2", "-882216989/131072"}, {1, 17}},
      {Curve::X0,
       21,
       "21.32.1.a.1",
       {// 3375/2, -140625/8, -5745^3/2^7, -9*505^3/2^21
        "3375/2", "-140625/8", "-189613868625/128", "-1159088625/2097152"},
       {1, 3, 7, 21}},
      {Curve::X0, 28, "28.64.3.b.1", {"351/4", /* -13*1437^3/2^14 */ "-38575685889/16384"}, {3, 3, 21, 21}},
      {Curve::X0, 37, "37.38.2.a.1", {"-9317", /* -7*285371^3 */ "-162677523113838677"}, {1, 37}},
  };
  // Finite B1-closure table.
  static const std::vector<FiniteClosureRow> x1{
      {Curve::X1, 7, "7.56.1.b.1", {"2268945/128"}, {6, 9, 9}},
      {Curve::X1, 11, "11.12.1.a.1", {"-121", "-24729001"}, {5, 55}},
      {Curve::X1, 12, "12.48.1.q.1", {"3375/64"}, {12, 12, 24}},
      {Curve::X1, 12, "12.64.1.b.1", {"109503/64"}, {3, 3, 6, 18, 18}},
      {Curve::X1, 12, "12.64.1.b.2", {"-35937/4"}, {6, 6, 9, 9, 18}},
      {Curve::X1,
       13,
       "13.91.3.a.1",
       {"-160855552000/1594323", "11225615440/1594323",
        "90616364985637924505590372621162077487104/197650497353702094308570556640625"},
       {36, 48}},
      {Curve::X1, 15, "15.48.1.a.1", {"-121945/32", "46969655/32768"}, {2, 2, 6, 6, 20, 60}},
      {Curve::X1, 15, "15.48.1.a.2", {"-25/2", "-349938025/8"}, {4, 10, 10, 12, 30, 30}},
      {Curve::X1, 15, "15.72.1.a.1", {"-1680914269/32768"}, {8, 8, 20, 20, 40}},
      {Curve::X1, 15, "15.72.1.a.2", {"1331/8"}, {4, 4, 8, 40, 40}},
      {Curve::X1, 16, "16.96.3.fa.1", {/* 4097^3/2^4 */ "68769820673/16"}, {16, 16, 16, 16, 32}},
      {Curve::X1, 16, "16.96.3.fa.2", {"16974593/256"}, {8, 8, 8, 8, 64}},
      {Curve::X1, 17, "17.36.1.a.1", {"-297756989/2"}, {8, 68, 68}},
      {Curve::X1, 17, "17.36.1.a.2", {"-882216989/131072"}, {4, 4, 136}},
      {Curve::X1, 18, "18.72.2.c.1", {"406749952"}, {27, 27, 27, 27}},
      {Curve::X1, 18, "18.72.2.c.2", {"1792"}, {9, 9, 9, 81}},
      {Curve::X1, 20, "20.48.1.a.1", {"1026895/1024"}, {12, 12, 120}},
      {Curve::X1, 20, "20.48.1.a.2", {"-1723025/4"}, {24, 60, 60}},
      {Curve::X1, 21, "21.64.1.a.1", {/* -9*505^3/2^21 */ "-1159088625/2097152"}, {6, 18, 21, 21, 126}},
      {Curve::X1, 21, "21.64.1.a.2", {"3375/2"}, {6, 9, 9, 42, 126}},
      {Curve::X1, 21, "21.64.1.a.3", {"-140625/8"}, {3, 3, 18, 42, 126}},
      {Curve::X1, 21, "21.64.1.a.4", {/* -5745^3/2^7 */ "-189613868625/128"}, {6, 18, 42, 63, 63}},
      {Curve::X1, 24, "24.72.2.hl.1", {"4913"}, {32, 32, 128}},
      {Curve::X1, 24, "24.72.2.hl.2", {"16974593"}, {64, 64, 64}},
      {Curve::X1, 28, "28.128.5.b.1", {/* -13*1437^3/2^14 */ "-38575685889/16384"}, {18, 18, 63, 63, 126}},
      {Curve::X1, 28, "28.128.5.b.2", {"351/4"}, {9, 9, 18, 126, 126}},
      {Curve::X1, 37, "37.114.4.b.1", {"-9317"}, {6, 6, 6, 666}},
      {Curve::X1, 37, "37.114.4.b.2", {/* -7*285371^3 */ "-162677523113838677"}, {18, 222, 222, 222}},
  };
  return c == Curve::X0 ? x0 : x1;
}

SubgroupSpec ExceptionalRow::spec() const {
  std::vector<Mat2> gens;
  for (const auto& g : generators) gens.emplace_back(modulus, g[0], g[1], g[2], g[3]);
  return make_spec(modulus, std::move(gens));
}

const std::vector<ExceptionalRow>& exceptional_rows() {
  // Exceptional j-invariants with image generators; the flag marks rows
  // whose SL_2-intersection is outside the known infinite families.
  static const std::vector<ExceptionalRow> rows{
      {"7.56.1.b.1", "2268945/128", 56, 112, 5, 14, false,
       {{1, 28, 41, 55}, {49, 22, 41, 27}, {20, 21, 1, 1}, {0, 19, 23, 16}}},
      {"12.32.1.b.1", "-35937/4", 12, 64, 1, 12, true, {{9, 5, 8, 3}, {10, 1, 5, 3}, {1, 0, 9, 7}}},
      {"12.32.1.b.1", "109503/64", 12, 64, 1, 12, true, {{6, 5, 5, 3}, {9, 8, 5, 3}, {11, 8, 3, 1}}},
      {"15.36.1.b.1", "1331/8", 1560, 288, 17, 30, true,
       {{439, 117, 15, 4},
        {71, 27, -405, -154},
        {18, 31, 5, 9},
        {-57, -62, 25, 27},
        {27, 158, 25, 147},
        {-131, -150, 15, 17},
        {176, 15, 45, 4}}},
      {"15.36.1.b.1", "-1680914269/32768", 1560, 288, 17, 30, true,
       {{11, 261, 15, 356},
        {49, -567, 15, 304},
        {-6, -1, 25, 3},
        {117, 17, 20, 3},
        {27, 7, -130, -33},
        {82, 15, 75, 14},
        {29, 0, 15, 1}}},
      {"16.96.3.fa.1", "68769820673/16", 656, 192, 9, 16, false,
       {{44, 133, 201, 442}, {40, 91, 187, 550}, {347, 64, 180, 655}, {135, 546, 552, 37}}},
      {"16.96.3.fa.2", "16974593/256", 656, 192, 9, 16, false,
       {{235, 164, 552, 55}, {393, 392, 202, 167}, {395, 612, 400, 63}, {578, 395, 577, 382}}},
      {"18.72.2.c.1", "406749952", 252, 432, 28, 36, false,
       {{163, 90, 216, 155}, {221, 96, 122, 235}, {121, 99, 183, 122}, {20, 135, 69, 173}}},
      {"18.72.2.c.2", "1792", 252, 432, 28, 36, false,
       {{164, 129, 79, 199}, {116, 57, 1, 1}, {203, 141, 173, 196}, {133, 18, 156, 107}}},
      {"24.72.2.hl.1", "4913", 3120, 576, 41, 48, false,
       {{117, 188, 28, 45},
        {13, 12, 300, 277},
        {9, 10, 170, 189},
        {27, 50, 34, 63},
        {19, 32, -154, -259},
        {-2, 43, -1, 16},
        {160, 27, 189, 32},
        {262, 35, 239, 32},
        {10, 3, 99, 32}}},
      {"24.72.2.hl.2", "16974593", 3120, 576, 41, 48, false,
       {{41, 42, -534, -547},
        {25, 18, 18, 13},
        {9, -152, 8, -135},
        {11, 42, 138, 527},
        {-469, -434, 40, 37},
        {34, -101, 23, -68},
        {32, 165, 3, 16},
        {-14, -13, 23, 20},
        {-752, 45, -435, 26}}},
  };
  return rows;
}

const std::vector<std::uint32_t>& candidate_sl_levels() {
  static const std::vector<std::uint32_t> levels{1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12,
                                                 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 24, 25,
                                                 26, 27, 28, 30, 32, 33, 36, 39, 40, 42, 48, 49, 52};
  return levels;
}

}  // namespace modfib
