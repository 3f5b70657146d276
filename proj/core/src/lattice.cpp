#include "clarr/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace clarr {

namespace {

Int floor_div(const Int &a, const Int &b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// g = s a + t b, g = gcd >= 0
void ext_gcd(const Int &a, const Int &b, Int &g, Int &s, Int &t) {
  Int old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s1;
    old_s = s1;
    s1 = tmp;
    tmp = old_t - q * t1;
    old_t = t1;
    t1 = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

}  // namespace

HermiteLattice::HermiteLattice(size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

bool HermiteLattice::insert(IntVec x) {
  if (x.size() != dim_) throw std::invalid_argument("lattice dimension mismatch");
  for (size_t c = 0; c < dim_; ++c) {
    if (x[c] == 0) continue;
    long pr = pivot_row_[c];
    if (pr < 0) {
      if (x[c] < 0)
        for (auto &v : x) v = -v;
      // reduce entries right of the pivot column against later pivots
      for (size_t k = 0; k < rows_.size(); ++k) {
        size_t pc = pivots_[k];
        if (pc <= c || x[pc] == 0) continue;
        Int q = floor_div(x[pc], rows_[k][pc]);
        if (q != 0)
          for (size_t i = pc; i < dim_; ++i) x[i] -= q * rows_[k][i];
      }
      auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
      rows_.insert(rows_.begin() + pos, std::move(x));
      pivots_.insert(pivots_.begin() + pos, c);
      for (size_t k = 0; k < pivots_.size(); ++k) pivot_row_[pivots_[k]] = static_cast<long>(k);
      return true;
    }
    IntVec &p = rows_[pr];
    if (x[c] % p[c] == 0) {
      Int q = x[c] / p[c];
      for (size_t i = c; i < dim_; ++i) x[i] -= q * p[i];
      continue;
    }
    Int g, s, t;
    ext_gcd(p[c], x[c], g, s, t);
    Int a = p[c] / g, b = x[c] / g;
    IntVec np(dim_), nx(dim_);
    for (size_t i = c; i < dim_; ++i) {
      np[i] = s * p[i] + t * x[i];
      nx[i] = a * x[i] - b * p[i];
    }
    p = std::move(np);
    x = std::move(nx);
    // the old pivot row is gone; a modified row keeps the lattice unchanged
  }
  return false;
}

bool HermiteLattice::contains(IntVec x) const {
  if (x.size() != dim_) throw std::invalid_argument("lattice dimension mismatch");
  for (size_t c = 0; c < dim_; ++c) {
    if (x[c] == 0) continue;
    long pr = pivot_row_[c];
    if (pr < 0) return false;
    const IntVec &p = rows_[pr];
    if (x[c] % p[c] != 0) return false;
    Int q = x[c] / p[c];
    for (size_t i = c; i < dim_; ++i) x[i] -= q * p[i];
  }
  return true;
}

IntMatrix HermiteLattice::basis() const { return rows_; }

std::vector<Int> SNFResult::torsion() const {
  std::vector<Int> t;
  for (auto &d : divisors)
    if (d != 1) t.push_back(d);
  return t;
}

std::string SNFResult::str() const {
  std::string s;
  if (free_rank() > 0) s = free_rank() == 1 ? "Z" : "Z^" + std::to_string(free_rank());
  for (auto &d : torsion()) s += (s.empty() ? "" : " + ") + std::string("Z/") + d.str();
  return s.empty() ? "0" : s;
}

SNFResult smith_normal_form(IntMatrix m, size_t cols) {
  // shrink to a Hermite basis first: same row space, at most cols rows
  HermiteLattice h(cols);
  for (auto &r : m) {
    if (r.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");
    h.insert(r);
  }
  IntMatrix a = h.basis();
  const size_t R = a.size(), C = cols;
  std::vector<Int> diag;
  for (size_t t = 0; t < R; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block
      size_t bi = R, bj = C;
      for (size_t i = t; i < R; ++i)
        for (size_t j = t; j < C; ++j)
          if (a[i][j] != 0 && (bi == R || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == R) break;
      std::swap(a[t], a[bi]);
      for (auto &row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (size_t i = t + 1; i < R; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        for (size_t j = t; j < C; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < C; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        for (size_t i = t; i < R; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t
      bool fixed = false;
      for (size_t i = t + 1; i < R && !fixed; ++i)
        for (size_t j = t + 1; j < C && !fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (size_t jj = t; jj < C; ++jj) a[t][jj] += a[i][jj];
            fixed = true;
          }
      if (!fixed) break;
    }
    if (a[t][t] == 0) break;
    diag.push_back(abs(a[t][t]));
  }
  std::sort(diag.begin(), diag.end());
  SNFResult r;
  r.divisors = diag;
  r.columns = C;
  return r;
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<size_t> rref(std::vector<std::vector<Rational>> &a, size_t cols) {
  std::vector<size_t> piv;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < a.size(); ++c) {
    size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    Rational inv = 1 / a[row][c];
    for (size_t j = c; j < cols; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

std::vector<std::vector<Rational>> to_rational(const IntMatrix &m, size_t cols) {
  std::vector<std::vector<Rational>> a;
  for (auto &r : m) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    bool nz = false;
    for (auto &v : r) nz = nz || v != 0;
    if (!nz) continue;
    a.emplace_back(r.begin(), r.end());
  }
  return a;
}

}  // namespace

size_t rational_rank(const IntMatrix &m, size_t cols) {
  auto a = to_rational(m, cols);
  return rref(a, cols).size();
}

IntMatrix rational_nullspace(const IntMatrix &m, size_t cols) {
  auto a = to_rational(m, cols);
  auto piv = rref(a, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  IntMatrix out;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rational> x(cols, 0);
    x[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -a[r][f];
    Int den = 1;
    for (auto &q : x) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(q));
    IntVec v(cols);
    Int g = 0;
    for (size_t i = 0; i < cols; ++i) {
      v[i] = boost::multiprecision::numerator(Rational(x[i] * den));
      g = boost::multiprecision::gcd(g, v[i]);
    }
    if (g > 1)
      for (auto &e : v) e /= g;
    out.push_back(v);
  }
  return out;
}

}  // namespace clarr
