#pragma once

#include <string>
#include <vector>

#include "clarr/word.hpp"

namespace clarr {

// Word in the Artin generators of B_m: +i is sigma_i, -i its inverse.
struct Braid {
  int strands = 1;
  std::vector<int> letters;

  Braid() = default;
  Braid(int m, std::vector<int> l);

  Braid inverse() const;
  Braid operator*(const Braid &o) const;
  Braid pow(int k) const;
  // Shift every index by s (embeds B_m into B_{m+s} on the upper strands when s >= 0).
  Braid shifted(int s, int new_strands) const;
  std::string str() const;
};

// Images of x_1..x_m under the automorphism of b; index 0 unused.
// The leftmost letter is applied last.
std::vector<FreeWord> artin_images(const Braid &b);
FreeWord artin_act(const Braid &b, const FreeWord &w);
bool braid_equal(const Braid &a, const Braid &b);

Braid garside(int m);
Braid half_twist_block(int a, int b, int m);
Braid delta_prime(int n);

struct LemmaDeltaRow {
  int n;
  bool equal;
  size_t lhs_letters, rhs_letters;
};
std::vector<LemmaDeltaRow> verify_lemma_delta(int n_max);

}  // namespace clarr
