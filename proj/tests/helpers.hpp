#pragma once
#include <random>
#include <stdexcept>
#include <vector>

#include "clarr/braid.hpp"
#include "clarr/word.hpp"

namespace clarr::testing {

inline FreeWord random_word(std::mt19937 &rng, int g, int len) {
  std::uniform_int_distribution<int> gen(1, g), sign(0, 1);
  std::vector<int> l;
  for (int i = 0; i < len; ++i) l.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return FreeWord::from_signed(l);
}

inline Braid random_braid(std::mt19937 &rng, int m, int len) {
  std::uniform_int_distribution<int> gen(1, m - 1), sign(0, 1);
  std::vector<int> l;
  for (int i = 0; i < len; ++i) l.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return Braid(m, l);
}

inline FreeWord w(std::initializer_list<int> l) { return FreeWord::from_signed(std::vector<int>(l)); }

}  // namespace clarr::testing
