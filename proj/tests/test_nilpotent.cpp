#include <doctest.h>

#include <array>

#include "clarr/arrangement.hpp"
#include "clarr/nilpotent.hpp"
#include "clarr/verify.hpp"
#include "helpers.hpp"

using namespace clarr;
using clarr::testing::w;

namespace {

FreeWord x(int i) { return FreeWord::gen(i); }

// Heisenberg projection onto the pair (i,j): x_i -> A, x_j -> B, others -> 1.
// For A^a B^b C^c the (1,3) entry is ab + c, with C = [A,B].
using M3 = std::array<std::array<int64_t, 3>, 3>;
M3 mul(const M3 &p, const M3 &q) {
  M3 r{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) r[a][c] += p[a][b] * q[b][c];
  return r;
}
int64_t heisenberg_gamma(const FreeWord &word, int i, int j) {
  M3 m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int l : word.expand()) {
    int gen = l > 0 ? l : -l, s = l > 0 ? 1 : -1;
    M3 e{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    if (gen == i) e[0][1] = s;
    if (gen == j) e[1][2] = s;
    m = mul(m, e);
  }
  return m[0][2] - m[0][1] * m[1][2];
}

Class2Element random_element(std::mt19937 &rng, int g) {
  std::uniform_int_distribution<int> d(-3, 3);
  Class2Element e(g);
  for (auto &a : e.v) a = d(rng);
  for (auto &a : e.gamma) a = d(rng);
  return e;
}

// Invariant factors from determinantal divisors: d_k = gcd of k-minors, factor_k = d_k / d_{k-1}.
Int det(std::vector<std::vector<Int>> m) {
  size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int r = 0;
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Int>> sub;
    for (size_t a = 1; a < n; ++a) {
      std::vector<Int> row;
      for (size_t b = 0; b < n; ++b)
        if (b != c) row.push_back(m[a][b]);
      sub.push_back(row);
    }
    Int t = m[0][c] * det(sub);
    r += (c % 2 == 0) ? t : Int(-t);
  }
  return r;
}
void subsets(size_t n, size_t k, size_t from, std::vector<size_t> &cur, std::vector<std::vector<size_t>> &out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}
std::vector<Int> determinantal_factors(const IntMatrix &m, size_t cols) {
  std::vector<Int> out;
  Int prev = 1;
  for (size_t k = 1; k <= std::min(m.size(), cols); ++k) {
    std::vector<std::vector<size_t>> rs, cs;
    std::vector<size_t> cur;
    subsets(m.size(), k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    Int g = 0;
    for (auto &r : rs)
      for (auto &c : cs) {
        std::vector<std::vector<Int>> sub;
        for (size_t a : r) {
          std::vector<Int> row;
          for (size_t b : c) row.push_back(m[a][b]);
          sub.push_back(row);
        }
        g = gcd(g, abs(det(sub)));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace

TEST_CASE("pair indexing") {
  for (int g = 2; g <= 7; ++g) {
    CHECK(pair_count(g) == static_cast<size_t>(g * (g - 1) / 2));
    size_t k = 0;
    for (int i = 1; i <= g; ++i)
      for (int j = i + 1; j <= g; ++j) {
        CHECK(pair_index(i, j, g) == k);
        CHECK(pair_of(k, g) == std::pair{i, j});
        ++k;
      }
  }
}

TEST_CASE("class-2 evaluation examples") {
  auto a = class2_eval(w({2, 1}), 2);
  CHECK(a.v == std::vector<int64_t>{1, 1});
  CHECK(a.gamma == std::vector<int64_t>{-1});
  auto c = class2_eval(commutator(x(1), x(2)), 2);
  CHECK(c.v == std::vector<int64_t>{0, 0});
  CHECK(c.gamma == std::vector<int64_t>{1});
  auto e = class2_eval(FreeWord(), 3);
  CHECK(e == Class2Element(3));
  auto conj = class2_eval(commutator(x(1), x(2).conjugate_by(x(3))), 3);
  CHECK(conj.v == std::vector<int64_t>{0, 0, 0});
  CHECK(conj.gamma[pair_index(1, 2, 3)] == 1);
  CHECK(conj.gamma[pair_index(1, 3, 3)] == 0);
  CHECK(conj.gamma[pair_index(2, 3, 3)] == 0);
}

TEST_CASE("class-2 group axioms") {
  std::mt19937 rng(5);
  for (int t = 0; t < 300; ++t) {
    int g = 2 + t % 5;
    auto a = random_element(rng, g), b = random_element(rng, g), c = random_element(rng, g);
    CHECK(class2_multiply(class2_multiply(a, b), c) == class2_multiply(a, class2_multiply(b, c)));
    CHECK(class2_multiply(a, class2_inverse(a)) == Class2Element(g));
    CHECK(class2_multiply(class2_inverse(a), a) == Class2Element(g));
    CHECK(class2_multiply(a, Class2Element(g)) == a);
  }
}

TEST_CASE("evaluation agrees with Heisenberg projections") {
  std::mt19937 rng(9);
  for (int t = 0; t < 200; ++t) {
    int g = 2 + t % 4;
    auto word = testing::random_word(rng, g, 14);
    auto e = class2_eval(word, g);
    CHECK(e.v == word.exponent_vector(g));
    for (int i = 1; i <= g; ++i)
      for (int j = i + 1; j <= g; ++j) CHECK(e.gamma[pair_index(i, j, g)] == heisenberg_gamma(word, i, j));
  }
}

TEST_CASE("evaluation is a homomorphism; conjugation invariance at v = 0") {
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    int g = 3 + t % 3;
    auto u = testing::random_word(rng, g, 8), a = testing::random_word(rng, g, 8);
    CHECK(class2_eval(u * a, g) == class2_multiply(class2_eval(u, g), class2_eval(a, g)));
    auto z = commutator(a, u);
    CHECK(class2_eval(z, g).v == std::vector<int64_t>(g, 0));
    CHECK(class2_eval(z.conjugate_by(u), g).gamma == class2_eval(z, g).gamma);
    // w1 w2 vs w2 w1 differ by the commutator of their exponent vectors
    auto d1 = class2_eval(u * a, g), d2 = class2_eval(a * u, g);
    auto cm = class2_eval(commutator(u, a), g);
    for (size_t k = 0; k < d1.gamma.size(); ++k) CHECK(d1.gamma[k] - d2.gamma[k] == cm.gamma[k]);
  }
}

TEST_CASE("comm_vector matches evaluation") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 100; ++t) {
    int g = 4;
    std::vector<int64_t> v(g);
    for (auto &a : v) a = d(rng);
    FreeWord m;
    for (int i = 1; i <= g; ++i) m *= FreeWord::gen(i, v[i - 1]);
    for (int s = 1; s <= g; ++s) CHECK(comm_vector(v, s, g) == class2_eval(commutator(m, x(s)), g).gamma);
  }
}

TEST_CASE("cyclic triple relators") {
  GroupPresentation p(3, {Relation::cyclic_plain({1, 2, 3})});
  auto q = class2_quotient(p);
  CHECK(q.commutator_lattice.rank() == 2);
  // [x2,x1] = [x3,x2] = [x3,x1]^-1 mod L2
  auto t12 = IntVec{1, 0, 0}, t13 = IntVec{0, 1, 0}, t23 = IntVec{0, 0, 1};
  auto diff = [](IntVec a, IntVec b, int s) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
  };
  CHECK(q.commutator_lattice.contains(diff(t12, t23, -1)));
  CHECK(q.commutator_lattice.contains(diff(t12, t13, 1)));
  CHECK(q.g2g3.str() == "Z");
}

TEST_CASE("smith normal form") {
  auto d = smith_normal_form({{2, 0}, {0, 3}}, 2);
  REQUIRE(d.divisors.size() == 2);
  CHECK(d.divisors[0] == 1);
  CHECK(d.divisors[1] == 6);
  auto z = smith_normal_form({{0, 0, 0}, {0, 0, 0}}, 3);
  CHECK(z.divisors.empty());
  CHECK(z.free_rank() == 3);
  auto id = smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  CHECK(id.divisors.size() == 3);
  CHECK(id.trivial());

  std::mt19937 rng(21);
  std::uniform_int_distribution<int> e(-6, 6), sz(1, 4);
  for (int t = 0; t < 150; ++t) {
    size_t r = sz(rng), c = sz(rng);
    IntMatrix m(r, IntVec(c));
    for (auto &row : m)
      for (auto &a : row) a = e(rng);
    auto snf = smith_normal_form(m, c);
    auto oracle = determinantal_factors(m, c);
    REQUIRE(snf.divisors.size() == oracle.size());
    for (size_t i = 0; i < oracle.size(); ++i) CHECK(snf.divisors[i] == oracle[i]);
  }
}

TEST_CASE("abelianizations") {
  CHECK(abelianize(verify::printed_m3()).str() == "Z^4");
  CHECK(abelianize(verify::printed_m4()).str() == "Z^5");
  for (int n = 5; n <= 10; ++n) CHECK(abelianize(an_presentation(n)).str() == "Z^" + std::to_string(n + 1));
}

TEST_CASE("G2/G3") {
  CHECK(class2_quotient(from_relators(2, {x(1)})).g2g3.trivial());
  CHECK(class2_quotient(verify::printed_m4()).g2g3.str() == "Z");
  CHECK(class2_quotient(verify::printed_m3()).g2g3.trivial());
  for (int n : {6, 8, 10}) CHECK(class2_quotient(an_presentation(n)).g2g3.str() == "Z");
}

TEST_CASE("kernel recipe and exact echelon agree") {
  std::mt19937 rng(23);
  std::vector<GroupPresentation> ps{verify::printed_m3(), verify::printed_m4(), verify::printed_m4cf(), an_presentation(6),
                                    an_presentation(7)};
  for (int t = 0; t < 40; ++t) {
    int g = 3 + t % 3;
    ps.push_back(from_relators(g, {testing::random_word(rng, g, 6), testing::random_word(rng, g, 8)}));
  }
  for (auto &p : ps) {
    auto q = class2_quotient(p);
    auto k = class2_lattice_kernel_recipe(p);
    CHECK(k.basis() == q.commutator_lattice.basis());
  }
}

TEST_CASE("center rank") {
  CHECK(center_rank_class2(class2_quotient(GroupPresentation(2))) == 1);
  CHECK(center_rank_class2(class2_quotient(GroupPresentation(2, {Relation::commute(x(1), x(2))}))) == 2);
  CHECK(center_rank_class2(class2_quotient(verify::printed_m4())) == 4);
  CHECK(center_rank_class2(class2_quotient(verify::z3_plus_f2())) == 4);
  for (int r = 1; r <= 5; ++r) CHECK(center_rank_class2(class2_quotient(verify::free_abelian(r))) == r);
}

TEST_CASE("even A_n: one independent commutator") {
  for (int n : {6, 8}) CHECK(commutators_all_proportional(class2_quotient(an_presentation(n))));
  CHECK_FALSE(commutators_all_proportional(class2_quotient(GroupPresentation(3))));
}

TEST_CASE("direct sum obstruction") {
  auto v6 = direct_sum_obstruction(class2_quotient(an_presentation(6)), 6);
  CHECK(v6.not_direct_sum);
  CHECK(v6.g2g3_free_rank == 1);
  CHECK(v6.center_rank <= 5);
  CHECK(direct_sum_obstruction(class2_quotient(an_presentation(8)), 8).not_direct_sum);
  auto v4 = direct_sum_obstruction(class2_quotient(an_presentation(4)), 4);
  CHECK_FALSE(v4.not_direct_sum);
  CHECK(v4.center_rank == 4);
  CHECK_THROWS(direct_sum_obstruction(class2_quotient(an_presentation(5)), 5));
}
