#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "clarr/presentation.hpp"

namespace clarr {

class FiniteGroupTable {
 public:
  FiniteGroupTable() = default;
  // Checks closure, associativity, identity and inverses; throws std::invalid_argument.
  FiniteGroupTable(std::string name, std::vector<std::vector<int>> table, std::vector<std::string> labels = {});
  // Group generated by permutations of {0..degree-1}, elements in BFS order from the identity.
  static FiniteGroupTable from_permutations(std::string name, const std::vector<std::vector<int>> &gens);

  const std::string &name() const { return name_; }
  int order() const { return n_; }
  int identity() const { return id_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string &label(int a) const { return labels_[a]; }
  bool abelian() const;
  int element_order(int a) const;
  int conjugacy_classes() const;
  // Order of the subgroup generated by elems.
  int closure_size(const std::vector<int> &elems) const;
  std::vector<std::vector<int>> table() const;

 private:
  std::string name_;
  int n_ = 0, id_ = 0;
  std::vector<int> table_, inv_;
  std::vector<std::string> labels_;
};

FiniteGroupTable builtin_group(const std::string &name);

enum class HomMode { All, Epi };

struct HomCountOptions {
  bool simplify = true;  // tietze first
  int threads = 1;       // partitions by the first generator's image
};

uint64_t hom_count(const GroupPresentation &p, const FiniteGroupTable &H, HomMode mode, HomCountOptions opt = {});
// Calls f with the images of x_1..x_g (0-based vector) for every homomorphism; no simplification.
void for_each_hom(const GroupPresentation &p, const FiniteGroupTable &H, const std::function<void(const std::vector<int> &)> &f);
// Plain enumeration of all |H|^g maps; test oracle.
uint64_t hom_count_naive(const GroupPresentation &p, const FiniteGroupTable &H, HomMode mode);

uint64_t automorphism_count(const FiniteGroupTable &H);
// Epimorphisms up to automorphisms of the target (kernels).
uint64_t epi_classes(const GroupPresentation &p, const FiniteGroupTable &H, HomCountOptions opt = {});

struct FingerprintEntry {
  std::string target;
  uint64_t all = 0, epi = 0;
  bool operator==(const FingerprintEntry &o) const { return target == o.target && all == o.all && epi == o.epi; }
};
using Fingerprint = std::vector<FingerprintEntry>;
Fingerprint fingerprint(const GroupPresentation &p, const std::vector<FiniteGroupTable> &targets, HomCountOptions opt = {});
std::string fingerprint_str(const Fingerprint &f);

}  // namespace clarr
