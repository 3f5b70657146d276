#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clarr/lattice.hpp"
#include "clarr/presentation.hpp"

namespace clarr {

// Index of t_{i,j}, 1 <= i < j <= g, in the commutator coordinates.
size_t pair_index(int i, int j, int g);
size_t pair_count(int g);
std::pair<int, int> pair_of(size_t idx, int g);

// x_1^{v_1}..x_g^{v_g} * prod t_{ij}^{gamma_ij} in the free class-2 nilpotent group.
struct Class2Element {
  int g = 0;
  std::vector<int64_t> v, gamma;
  explicit Class2Element(int g = 0);
  bool operator==(const Class2Element &o) const { return g == o.g && v == o.v && gamma == o.gamma; }
};

Class2Element class2_multiply(const Class2Element &a, const Class2Element &b);
Class2Element class2_inverse(const Class2Element &a);
Class2Element class2_eval(const FreeWord &w, int g);
// gamma-vector of [x^v, x_s]
std::vector<int64_t> comm_vector(const std::vector<int64_t> &v, int s, int g);

SNFResult abelianize(const GroupPresentation &p);

struct Class2Quotient {
  int g = 0;
  std::vector<Class2Element> relator_images;
  HermiteLattice commutator_lattice;  // L2 in Z^{C(g,2)}
  HermiteLattice exponent_lattice;    // relator exponent vectors in Z^g
  SNFResult abelian;                  // G/G2
  SNFResult g2g3;                     // G2/G3
};

Class2Quotient class2_quotient(const GroupPresentation &p);
// Same lattice from the kernel-combination recipe (v-kernel combinations of relator gammas).
HermiteLattice class2_lattice_kernel_recipe(const GroupPresentation &p);

int center_rank_class2(const Class2Quotient &q);

// When G2/G3 has free rank 1: alpha[s][i] = phi([x_i, x_s]) for a primitive phi vanishing on L2.
std::optional<std::vector<std::vector<Int>>> alpha_system(const Class2Quotient &q);

// Every t_ij equals +-t_kl modulo L2 (or vanishes).
bool commutators_all_proportional(const Class2Quotient &q);

struct DirectSumVerdict {
  bool not_direct_sum = false;
  size_t g2g3_free_rank = 0;
  std::vector<Int> g2g3_torsion;
  int center_rank = 0;
  int k = 0;
  std::string reason;
};
DirectSumVerdict direct_sum_obstruction(const Class2Quotient &q, int n);

}  // namespace clarr
