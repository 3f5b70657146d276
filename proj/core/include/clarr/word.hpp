#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace clarr {

// Run-length compressed, freely reduced word in x_1..x_g.
// A letter is (generator, exponent) with exponent != 0 and adjacent generators distinct.
class FreeWord {
 public:
  using Letter = std::pair<int, int64_t>;

  FreeWord() = default;
  // Reduces its input.
  explicit FreeWord(const std::vector<Letter> &raw);
  // Signed single letters: +i is x_i, -i is x_i^-1.
  static FreeWord from_signed(const std::vector<int> &letters);
  static FreeWord gen(int i, int64_t e = 1);

  const std::vector<Letter> &letters() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  int64_t length() const;  // sum of |exponents|
  int max_generator() const;
  std::vector<int> expand() const;  // signed single letters

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord &o) const;
  FreeWord &operator*=(const FreeWord &o);
  FreeWord pow(int64_t k) const;
  // u w u^-1
  FreeWord conjugate_by(const FreeWord &u) const;
  // x_i^{e} -> image[i] ^ e, image indexed 1..g.
  FreeWord substitute(const std::vector<FreeWord> &image) const;
  // Exponent sum of each generator, length g.
  std::vector<int64_t> exponent_vector(int g) const;
  // Cyclically reduced representative (drops a conjugating prefix).
  FreeWord cyclic_reduce() const;

  bool operator==(const FreeWord &o) const { return runs_ == o.runs_; }
  bool operator!=(const FreeWord &o) const { return runs_ != o.runs_; }
  bool operator<(const FreeWord &o) const { return runs_ < o.runs_; }

  // x1 x2^2 X3 style; "e" for the empty word.
  std::string str() const;

 private:
  std::vector<Letter> runs_;
  void push(int g, int64_t e);
  friend FreeWord free_reduce(const std::vector<Letter> &raw, int g);
};

// Throws std::out_of_range when a generator index falls outside 1..g.
FreeWord free_reduce(const std::vector<FreeWord::Letter> &raw, int g);

// [u,v] = u v u^-1 v^-1
FreeWord commutator(const FreeWord &u, const FreeWord &v);

// True when a and b are conjugate up to inversion (compares cyclic rotations).
bool same_relator(const FreeWord &a, const FreeWord &b);

}  // namespace clarr
