#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace clarr {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;

// Row-style Hermite basis of a sublattice of Z^n, grown one vector at a time.
class HermiteLattice {
 public:
  explicit HermiteLattice(size_t dim = 0);
  size_t dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }
  // Returns true if the lattice grew.
  bool insert(IntVec x);
  bool contains(IntVec x) const;
  // Basis rows in pivot order.
  IntMatrix basis() const;

 private:
  size_t dim_;
  std::vector<IntVec> rows_;     // rows_[k] has leading column pivots_[k]
  std::vector<size_t> pivots_;   // increasing
  std::vector<long> pivot_row_;  // column -> row or -1
};

struct SNFResult {
  std::vector<Int> divisors;  // nonzero invariant factors, each dividing the next
  size_t columns = 0;         // rank of the ambient Z^n
  size_t free_rank() const { return columns - divisors.size(); }
  // Nontrivial torsion: divisors other than 1.
  std::vector<Int> torsion() const;
  bool trivial() const { return free_rank() == 0 && torsion().empty(); }
  // Z^3 + Z/2 style.
  std::string str() const;
};

// Invariant factors of the row space; the cokernel Z^cols / rows is described by the result.
SNFResult smith_normal_form(IntMatrix m, size_t cols);
size_t rational_rank(const IntMatrix &m, size_t cols);
// Basis of {x in Q^cols : m x = 0}, scaled to primitive integer vectors.
IntMatrix rational_nullspace(const IntMatrix &m, size_t cols);

}  // namespace clarr
