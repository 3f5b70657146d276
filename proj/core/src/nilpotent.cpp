#include "clarr/nilpotent.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace clarr {

size_t pair_count(int g) { return static_cast<size_t>(g) * (g - 1) / 2; }

size_t pair_index(int i, int j, int g) {
  if (i < 1 || j > g || i >= j) throw std::out_of_range("pair_index needs 1 <= i < j <= g");
  // rows (1,2..g), (2,3..g), ...
  size_t before = static_cast<size_t>(i - 1) * g - static_cast<size_t>(i - 1) * i / 2;
  return before + (j - i - 1);
}

std::pair<int, int> pair_of(size_t idx, int g) {
  for (int i = 1; i < g; ++i) {
    size_t row = g - i;
    if (idx < row) return {i, i + 1 + static_cast<int>(idx)};
    idx -= row;
  }
  throw std::out_of_range("pair_of");
}

Class2Element::Class2Element(int g_) : g(g_), v(g_, 0), gamma(pair_count(g_), 0) {}

Class2Element class2_multiply(const Class2Element &a, const Class2Element &b) {
  if (a.g != b.g) throw std::invalid_argument("class2_multiply: generator counts differ");
  Class2Element c = a;
  const int g = a.g;
  for (int i = 0; i < g; ++i) c.v[i] += b.v[i];
  for (size_t k = 0; k < c.gamma.size(); ++k) c.gamma[k] += b.gamma[k];
  // moving x_i^{b_i} left past x_j^{a_j} (j > i) picks up t_ij^{-a_j b_i}
  for (int i = 1; i <= g; ++i) {
    if (b.v[i - 1] == 0) continue;
    for (int j = i + 1; j <= g; ++j)
      if (a.v[j - 1] != 0) c.gamma[pair_index(i, j, g)] -= a.v[j - 1] * b.v[i - 1];
  }
  return c;
}

Class2Element class2_inverse(const Class2Element &a) {
  // (v, gamma)^-1 = (-v, -gamma - B(v, v))
  Class2Element r(a.g);
  for (int i = 0; i < a.g; ++i) r.v[i] = -a.v[i];
  for (size_t k = 0; k < a.gamma.size(); ++k) r.gamma[k] = -a.gamma[k];
  for (int i = 1; i <= a.g; ++i)
    for (int j = i + 1; j <= a.g; ++j) r.gamma[pair_index(i, j, a.g)] -= a.v[j - 1] * a.v[i - 1];
  return r;
}

Class2Element class2_eval(const FreeWord &w, int g) {
  if (w.max_generator() > g) throw std::out_of_range("class2_eval: generator out of range");
  Class2Element acc(g);
  for (auto [i, e] : w.letters()) {
    Class2Element x(g);
    x.v[i - 1] = e;
    acc = class2_multiply(acc, x);
  }
  return acc;
}

std::vector<int64_t> comm_vector(const std::vector<int64_t> &v, int s, int g) {
  std::vector<int64_t> out(pair_count(g), 0);
  for (int i = 1; i <= g; ++i) {
    if (i == s || v[i - 1] == 0) continue;
    if (i < s)
      out[pair_index(i, s, g)] += v[i - 1];
    else
      out[pair_index(s, i, g)] -= v[i - 1];
  }
  return out;
}

namespace {

IntVec to_int(const std::vector<int64_t> &x) { return IntVec(x.begin(), x.end()); }

// Big-integer class-2 element used while echelonizing the normal closure.
struct BigElt {
  IntVec v, gamma;
};

BigElt big_mul(const BigElt &a, const BigElt &b, int g) {
  BigElt c = a;
  for (int i = 0; i < g; ++i) c.v[i] += b.v[i];
  for (size_t k = 0; k < c.gamma.size(); ++k) c.gamma[k] += b.gamma[k];
  for (int i = 1; i <= g; ++i) {
    if (b.v[i - 1] == 0) continue;
    for (int j = i + 1; j <= g; ++j)
      if (a.v[j - 1] != 0) c.gamma[pair_index(i, j, g)] -= a.v[j - 1] * b.v[i - 1];
  }
  return c;
}

// a^k = (k v, k gamma - C(k,2) B(v,v))
BigElt big_pow(const BigElt &a, const Int &k, int g) {
  BigElt r{IntVec(g), IntVec(a.gamma.size())};
  for (int i = 0; i < g; ++i) r.v[i] = k * a.v[i];
  Int c2 = k * (k - 1) / 2;
  for (size_t t = 0; t < a.gamma.size(); ++t) r.gamma[t] = k * a.gamma[t];
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j) r.gamma[pair_index(i, j, g)] -= c2 * a.v[j - 1] * a.v[i - 1];
  return r;
}

}  // namespace

SNFResult abelianize(const GroupPresentation &p) {
  IntMatrix m;
  for (auto &w : to_relator_form(p)) m.push_back(to_int(w.exponent_vector(p.generators)));
  return smith_normal_form(m, p.generators);
}

Class2Quotient class2_quotient(const GroupPresentation &p) {
  const int g = p.generators;
  const size_t N = pair_count(g);
  Class2Quotient q{g, {}, HermiteLattice(N), HermiteLattice(g), {}, {}};
  for (auto &w : to_relator_form(p)) q.relator_images.push_back(class2_eval(w, g));

  // normal closure: relator images plus [r, x_s], all central
  for (auto &r : q.relator_images) {
    q.exponent_lattice.insert(to_int(r.v));
    for (int s = 1; s <= g; ++s) q.commutator_lattice.insert(to_int(comm_vector(r.v, s, g)));
  }
  // echelonize the relator images by group operations; central by-products land in L2
  std::map<int, BigElt> pivots;
  for (auto &r : q.relator_images) {
    BigElt x{to_int(r.v), to_int(r.gamma)};
    for (;;) {
      int c = 0;
      while (c < g && x.v[c] == 0) ++c;
      if (c == g) {
        q.commutator_lattice.insert(x.gamma);
        break;
      }
      auto it = pivots.find(c);
      if (it == pivots.end()) {
        if (x.v[c] < 0) x = big_pow(x, -1, g);
        pivots.emplace(c, std::move(x));
        break;
      }
      BigElt &pv = it->second;
      Int quo = x.v[c] / pv.v[c];
      x = big_mul(x, big_pow(pv, -quo, g), g);
      if (x.v[c] != 0) {
        std::swap(x, pv);
        if (pv.v[c] < 0) pv = big_pow(pv, -1, g);
      }
    }
  }
  q.abelian = abelianize(p);
  q.g2g3 = smith_normal_form(q.commutator_lattice.basis(), N);
  return q;
}

HermiteLattice class2_lattice_kernel_recipe(const GroupPresentation &p) {
  const int g = p.generators;
  const size_t N = pair_count(g);
  HermiteLattice L(N);
  std::vector<Class2Element> imgs;
  for (auto &w : to_relator_form(p)) imgs.push_back(class2_eval(w, g));
  for (auto &r : imgs)
    for (int s = 1; s <= g; ++s) L.insert(to_int(comm_vector(r.v, s, g)));
  // kernel of the map n -> sum n_r v_r
  IntMatrix vt(g, IntVec(imgs.size()));
  for (size_t r = 0; r < imgs.size(); ++r)
    for (int i = 0; i < g; ++i) vt[i][r] = imgs[r].v[i];
  for (auto &n : rational_nullspace(vt, imgs.size())) {
    IntVec comb(N, 0);
    for (size_t r = 0; r < imgs.size(); ++r)
      if (n[r] != 0)
        for (size_t k = 0; k < N; ++k) comb[k] += n[r] * imgs[r].gamma[k];
    L.insert(comb);
  }
  return L;
}

namespace {

IntMatrix annihilator(const Class2Quotient &q) {
  const size_t N = pair_count(q.g);
  return rational_nullspace(q.commutator_lattice.basis(), N);
}

}  // namespace

int center_rank_class2(const Class2Quotient &q) {
  const int g = q.g;
  IntMatrix F = annihilator(q);
  // m is central mod G3 iff f(comm(m, e_s)) = 0 for all annihilating f and all s
  IntMatrix cond;
  for (auto &f : F)
    for (int s = 1; s <= g; ++s) {
      IntVec row(g, 0);
      for (int i = 1; i <= g; ++i) {
        if (i == s) continue;
        row[i - 1] = i < s ? f[pair_index(i, s, g)] : -f[pair_index(s, i, g)];
      }
      cond.push_back(row);
    }
  int dim_m = g - static_cast<int>(rational_rank(cond, g));
  int exp_rank = static_cast<int>(q.exponent_lattice.rank());
  return dim_m - exp_rank + static_cast<int>(q.g2g3.free_rank());
}

std::optional<std::vector<std::vector<Int>>> alpha_system(const Class2Quotient &q) {
  if (q.g2g3.free_rank() != 1) return std::nullopt;
  IntMatrix F = annihilator(q);
  const IntVec &f = F.at(0);
  const int g = q.g;
  std::vector<std::vector<Int>> a(g + 1, std::vector<Int>(g + 1, 0));
  for (int s = 1; s <= g; ++s)
    for (int i = 1; i <= g; ++i) {
      if (i == s) continue;
      a[s][i] = i < s ? f[pair_index(i, s, g)] : -f[pair_index(s, i, g)];
    }
  return a;
}

bool commutators_all_proportional(const Class2Quotient &q) {
  const size_t N = pair_count(q.g);
  std::vector<size_t> live;
  for (size_t k = 0; k < N; ++k) {
    IntVec e(N, 0);
    e[k] = 1;
    if (!q.commutator_lattice.contains(e)) live.push_back(k);
  }
  if (live.empty()) return true;
  size_t ref = live[0];
  for (size_t k : live) {
    IntVec plus(N, 0), minus(N, 0);
    plus[ref] = 1;
    plus[k] += 1;
    minus[ref] = 1;
    minus[k] -= 1;
    if (k != ref && !q.commutator_lattice.contains(plus) && !q.commutator_lattice.contains(minus)) return false;
  }
  return true;
}

DirectSumVerdict direct_sum_obstruction(const Class2Quotient &q, int n) {
  if (n < 4 || n % 2) throw std::invalid_argument("direct_sum_obstruction needs even n >= 4");
  DirectSumVerdict v;
  v.k = n / 2;
  v.g2g3_free_rank = q.g2g3.free_rank();
  v.g2g3_torsion = q.g2g3.torsion();
  v.center_rank = center_rank_class2(q);
  bool g2_is_z = v.g2g3_free_rank == 1 && v.g2g3_torsion.empty();
  if (!g2_is_z) {
    v.reason = "G2/G3 is " + q.g2g3.str() + ", not Z; the rank argument does not apply";
    return v;
  }
  // Z^r + F_m1 + ... with G2/G3 = Z forces a single F_2 and r = 2k-1; its class-2 center has rank 2k
  if (v.center_rank != 2 * v.k) {
    v.not_direct_sum = true;
    v.reason = "G2/G3 = Z leaves only Z^" + std::to_string(2 * v.k - 1) + " + F2, whose class-2 center has rank " +
               std::to_string(2 * v.k) + "; computed center rank " + std::to_string(v.center_rank);
  } else {
    v.reason = "center rank equals " + std::to_string(2 * v.k) + ", consistent with Z^" + std::to_string(2 * v.k - 1) + " + F2";
  }
  return v;
}

}  // namespace clarr
