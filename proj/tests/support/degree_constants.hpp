#pragma once

// Second transcription of the per-level degree constants, kept apart from
// the library tables so the two can be compared.

#include <cstdint>
#include <map>
#include <set>

namespace reference {

using Sets = std::map<std::uint32_t, std::set<std::uint64_t>>;

inline const Sets& x0_infinite() {
  static const Sets s{{1, {1}},          {2, {1, 2}},      {3, {1, 2, 3}},  {4, {1, 3}},
                      {5, {1, 2, 4, 5}}, {6, {1, 2}},      {7, {1, 2, 6, 7}}, {8, {1}},
                      {9, {1, 2}},       {10, {1, 2, 5, 10}}, {12, {1, 3}},  {13, {1, 13}},
                      {16, {1}},         {18, {1, 2, 4}},  {25, {1, 4}}};
  return s;
}

inline const Sets& x1_infinite() {
  static const Sets s{{1, {1}},
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
                      {25, {5, 10, 20, 40}}};
  return s;
}

inline Sets x0_all() {
  Sets s = x0_infinite();
  s[7].insert(3);
  s[11] = {1, 11};
  s[12].insert(9);
  s[13].insert({6, 8});
  s[15] = {1, 2, 3, 5, 10, 15};
  s[17] = {1, 17};
  s[21] = {1, 3, 7, 21};
  s[28] = {3, 21};
  s[37] = {1, 37};
  return s;
}

inline Sets x1_all() {
  Sets s = x1_infinite();
  s[7].insert(9);
  s[11] = {5, 55};
  s[12].insert({9, 18});
  s[13].insert({36, 48});
  s[15] = {2, 4, 6, 10, 12, 20, 30, 60};
  s[17] = {4, 8, 68, 136};
  s[21] = {3, 6, 9, 18, 21, 42, 63, 126};
  s[28] = {9, 18, 63, 126};
  s[37] = {6, 18, 222, 666};
  return s;
}

}  // namespace reference
