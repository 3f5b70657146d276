#include "clarr/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace clarr {

void FreeWord::push(int g, int64_t e) {
  if (e == 0) return;
  if (!runs_.empty() && runs_.back().first == g) {
    runs_.back().second += e;
    if (runs_.back().second == 0) runs_.pop_back();
    return;
  }
  runs_.emplace_back(g, e);
}

FreeWord::FreeWord(const std::vector<Letter> &raw) {
  for (auto [g, e] : raw) {
    if (g < 1) throw std::out_of_range("generator index must be >= 1");
    push(g, e);
  }
}

FreeWord free_reduce(const std::vector<FreeWord::Letter> &raw, int g) {
  for (auto [i, e] : raw)
    if (i < 1 || i > g) throw std::out_of_range("generator x" + std::to_string(i) + " out of range 1.." + std::to_string(g));
  return FreeWord(raw);
}

FreeWord FreeWord::from_signed(const std::vector<int> &letters) {
  FreeWord w;
  for (int l : letters) {
    if (l == 0) throw std::out_of_range("letter 0");
    w.push(std::abs(l), l > 0 ? 1 : -1);
  }
  return w;
}

FreeWord FreeWord::gen(int i, int64_t e) {
  if (i < 1) throw std::out_of_range("generator index must be >= 1");
  FreeWord w;
  w.push(i, e);
  return w;
}

int64_t FreeWord::length() const {
  int64_t n = 0;
  for (auto &r : runs_) n += std::llabs(r.second);
  return n;
}

int FreeWord::max_generator() const {
  int m = 0;
  for (auto &r : runs_) m = std::max(m, r.first);
  return m;
}

std::vector<int> FreeWord::expand() const {
  std::vector<int> out;
  for (auto [g, e] : runs_)
    for (int64_t k = 0; k < std::llabs(e); ++k) out.push_back(e > 0 ? g : -g);
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.runs_.reserve(runs_.size());
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) w.runs_.emplace_back(it->first, -it->second);
  return w;
}

FreeWord &FreeWord::operator*=(const FreeWord &o) {
  for (auto [g, e] : o.runs_) push(g, e);
  return *this;
}

FreeWord FreeWord::operator*(const FreeWord &o) const {
  FreeWord w = *this;
  w *= o;
  return w;
}

FreeWord FreeWord::pow(int64_t k) const {
  FreeWord base = k < 0 ? inverse() : *this, out;
  for (int64_t i = 0; i < std::llabs(k); ++i) out *= base;
  return out;
}

FreeWord FreeWord::conjugate_by(const FreeWord &u) const { return u * *this * u.inverse(); }

FreeWord FreeWord::substitute(const std::vector<FreeWord> &image) const {
  FreeWord out;
  for (auto [g, e] : runs_) {
    if (g >= static_cast<int>(image.size())) throw std::out_of_range("substitution misses x" + std::to_string(g));
    out *= image[g].pow(e);
  }
  return out;
}

std::vector<int64_t> FreeWord::exponent_vector(int g) const {
  std::vector<int64_t> v(g, 0);
  for (auto [i, e] : runs_) {
    if (i > g) throw std::out_of_range("exponent_vector: generator out of range");
    v[i - 1] += e;
  }
  return v;
}

FreeWord FreeWord::cyclic_reduce() const {
  std::vector<Letter> r = runs_;
  size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo].first == r[hi - 1].first) {
    int64_t s = r[lo].second + r[hi - 1].second;
    if (s == 0) {
      ++lo;
      --hi;
      continue;
    }
    // merge the tail run into the head run; the word is now a rotation
    r[lo].second = s;
    --hi;
    break;
  }
  FreeWord w;
  for (size_t i = lo; i < hi; ++i) w.push(r[i].first, r[i].second);
  return w;
}

std::string FreeWord::str() const {
  if (runs_.empty()) return "e";
  std::string s;
  for (auto [g, e] : runs_) {
    std::string name = (e > 0 ? "x" : "X") + std::to_string(g);
    int64_t n = std::llabs(e);
    if (n == 1)
      s += name;
    else
      s += name + "^" + std::to_string(n);
  }
  return s;
}

FreeWord commutator(const FreeWord &u, const FreeWord &v) { return u * v * u.inverse() * v.inverse(); }

bool same_relator(const FreeWord &a, const FreeWord &b) {
  auto ea = a.cyclic_reduce().expand();
  auto eb = b.cyclic_reduce().expand();
  if (ea.size() != eb.size()) return false;
  if (ea.empty()) return true;
  auto rotations_match = [](const std::vector<int> &x, const std::vector<int> &y) {
    size_t n = x.size();
    for (size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i) ok = x[(i + s) % n] == y[i];
      if (ok) return true;
    }
    return false;
  };
  if (rotations_match(ea, eb)) return true;
  std::vector<int> inv(eb.rbegin(), eb.rend());
  for (int &l : inv) l = -l;
  return rotations_match(ea, inv);
}

}  // namespace clarr
