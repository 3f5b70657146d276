#include <doctest.h>

#include <algorithm>

#include "clarr/arrangement.hpp"
#include "clarr/finquot.hpp"
#include "clarr/nilpotent.hpp"
#include "clarr/verify.hpp"
#include "helpers.hpp"

using namespace clarr;
using clarr::testing::w;

namespace {
FreeWord x(int i) { return FreeWord::gen(i); }

bool all_conjugation_free(const GroupPresentation &p) {
  return std::all_of(p.relations.begin(), p.relations.end(), [](const Relation &r) {
    return r.kind == Relation::Kind::Equality || r.conjugation_free();
  });
}

int triple_count(const CLArrangement &a) {
  return static_cast<int>(std::count_if(a.multiple_points.begin(), a.multiple_points.end(),
                                        [](const MultiplePoint &m) { return m.components.size() == 3; }));
}
}  // namespace

TEST_CASE("graph and beta") {
  auto none = line_arrangement(3, {});
  CHECK(graph_of(none).vertices == 0);
  CHECK(graph_of(none).edges.empty());
  CHECK(beta(none) == 0);
  CHECK(v_of(none) == 0);

  auto path = line_arrangement(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}});
  CHECK(graph_of(path).vertices == 3);
  CHECK(graph_of(path).edges.size() == 2);
  CHECK(beta(path) == 0);

  for (int n = 3; n <= 13; ++n) {
    auto a = an_arrangement(n);
    auto g = graph_of(a);
    CHECK(g.vertices == n);
    CHECK(g.edges.size() == static_cast<size_t>(n));
    CHECK(beta(a) == 1);
  }
}

TEST_CASE("three lines and the circle through their intersections") {
  CLArrangement a;
  a.components = {{0, Component::Kind::Conic}, {1}, {2}, {3}};
  a.slot_map = {0, 1, 2, 3, 0};
  a.multiple_points = {{{0, 1, 2}, true, 1}, {{0, 2, 3}, true, 2}, {{0, 1, 3}, true, 1}};
  CHECK(beta(a) == 1);
}

TEST_CASE("v") {
  CHECK(v_of(line_arrangement(3, {{1, 2, 3}})) == 1);
  CHECK(v_of(line_arrangement(2, {})) == 0);
  CHECK(v_of(line_arrangement(5, {{1, 2, 3, 4, 5}})) == 6);
}

TEST_CASE("A_n incidences") {
  for (int n = 3; n <= 13; ++n) {
    auto a = an_arrangement(n);
    CHECK_NOTHROW(a.validate());
    CHECK(a.degree() == n + 2);
    CHECK(triple_count(a) == n);
    int shared = 0;
    for (int l1 = 1; l1 <= n; ++l1)
      for (int l2 = l1 + 1; l2 <= n; ++l2)
        for (auto &m : a.multiple_points)
          shared += std::count(m.components.begin(), m.components.end(), l1) && std::count(m.components.begin(), m.components.end(), l2);
    // the remaining line pairs meet in nodes
    CHECK(n * (n - 1) / 2 - shared == n * (n - 1) / 2 - n);
    for (auto &c : a.components) {
      if (c.kind != Component::Kind::Line) continue;
      int triples = 0;
      for (int idx : a.points_on(c.id)) triples += a.multiple_points[idx].components.size() == 3;
      CHECK(triples == 2);
    }
  }
}

TEST_CASE("conic slots") {
  CHECK(an_conic_slots(3) == std::pair{1, 4});
  CHECK(an_conic_slots(4) == std::pair{1, 4});
  CHECK(an_conic_slots(11) == std::pair{5, 8});
}

TEST_CASE("k = 1 regression for the odd slot count") {
  // 2k+3 slots: three lines plus two conic slots, and the second branch relation is M3's x2 x1 X2 = x4.
  CHECK(an_arrangement(3).degree() == 5);
  auto [l, r] = an_second_branch(3);
  CHECK(l == w({2, 1, -2}));
  CHECK(r == x(4));
  // 2k+2 slots cannot hold three lines and two conic slots
  CHECK(2 * 1 + 2 < 3 + 2);
  auto targets = std::vector<FiniteGroupTable>{builtin_group("S3"), builtin_group("D4")};
  CHECK(fingerprint(an_presentation(3), targets) == fingerprint(verify::printed_m3(), targets));
}

TEST_CASE("conjugation-free candidates") {
  auto triple = line_arrangement(3, {{1, 2, 3}});
  auto p = cf_candidate(triple);
  CHECK(p.generators == 3);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0] == Relation::cyclic_plain({1, 2, 3}));
  for (int n = 3; n <= 13; ++n) CHECK(all_conjugation_free(cf_candidate(an_arrangement(n))));
}

TEST_CASE("A_n presentation shape") {
  auto p4 = an_presentation(4);
  CHECK(p4.relations[0] == Relation::equality(x(1), x(4)));
  auto [l, r] = an_second_branch(4);
  CHECK(l == w({2, 1, -2}));
  CHECK(r == w({5, 4, -5}));
  CHECK(p4.relations[1] == Relation::equality(l, r));
  auto full3 = an_presentation(3, Fidelity::Full);
  CHECK(full3.generators == 5);
  CHECK_THROWS(an_presentation(5, Fidelity::Full));
  CHECK_THROWS(an_presentation(2));
}

TEST_CASE("even n = 10 triple list") {
  auto a = an_arrangement(10);
  std::vector<std::vector<int>> got;
  for (auto &m : a.multiple_points)
    if (m.components.size() == 3) got.push_back(m.components);
  CHECK(got.size() == 10);
  for (auto &t : got) CHECK(std::count(t.begin(), t.end(), 0) <= 1);
  CHECK(class2_quotient(an_presentation(10)).g2g3.str() == "Z");
}

TEST_CASE("branch simplification") {
  auto b5 = branch_simplify(5);
  CHECK(b5.outcome == BranchSimplification::Outcome::Commutator);
  CHECK(b5.derived == Relation::commute(x(2), x(6)));
  auto b7 = branch_simplify(7);
  CHECK(b7.derived == Relation::commute(x(3), x(4)));
  for (int n = 5; n <= 13; n += 2) {
    auto b = branch_simplify(n);
    int k = (n - 1) / 2;
    CHECK(b.outcome == BranchSimplification::Outcome::Commutator);
    if (k % 2 == 1)
      CHECK(b.derived == Relation::commute(x(k), x(k + 1)));
    else
      CHECK(b.derived == Relation::commute(x(k), x(2 * k + 2)));
  }
  CHECK(branch_simplify(8).outcome != BranchSimplification::Outcome::Commutator);
}

TEST_CASE("derivations replay") {
  for (int n = 5; n <= 13; ++n) {
    auto b = branch_simplify(n);
    auto p = an_presentation(n);
    CHECK(replay(b, p).empty());
    for (auto &s : b.log) {
      if (s.kind != DerivationStep::Kind::Rewrite) continue;
      REQUIRE(s.relation >= 0);
      CHECK(certify_consequence(s.rho, p.relations[s.relation]));
    }
  }
  // a tampered step is caught
  auto b = branch_simplify(7);
  REQUIRE_FALSE(b.log.empty());
  b.log.back().rhs = b.log.back().rhs * x(1);
  CHECK_FALSE(replay(b, an_presentation(7)).empty());
}

TEST_CASE("certified consequences") {
  auto r = Relation::equality(x(1), x(4));
  CHECK(certify_consequence(w({1, -4}), r));
  CHECK(certify_consequence(w({-4, 1}), r));
  // only the relation's own letters are allowed
  CHECK_FALSE(certify_consequence(w({2, 1, -4, -2}), r));
  CHECK_FALSE(certify_consequence(w({1, -2}), r));
}

TEST_CASE("odd reduced presentations") {
  for (int n = 5; n <= 13; n += 2) {
    auto full = an_presentation(n), red = an_odd_reduced(n);
    CHECK(abelianize(red).str() == "Z^" + std::to_string(n + 1));
    CHECK(class2_quotient(red).g2g3.trivial());
    CHECK(red.relations.size() == full.relations.size() + 2);
  }
}

TEST_CASE("v matches G2/G3 for conjugation-free line arrangements") {
  std::mt19937 rng(43);
  for (int t = 0; t < 30; ++t) {
    int lines = 3 + t % 4;
    std::vector<std::vector<int>> pts;
    std::vector<std::vector<bool>> used(lines + 1, std::vector<bool>(lines + 1));
    std::uniform_int_distribution<int> pick(1, lines);
    for (int tries = 0; tries < 3; ++tries) {
      std::vector<int> cand;
      for (int i = 1; i <= lines; ++i)
        if (pick(rng) % 2 == 0) cand.push_back(i);
      bool ok = cand.size() >= 3;
      for (size_t a = 0; ok && a < cand.size(); ++a)
        for (size_t b = a + 1; b < cand.size(); ++b) ok = ok && !used[cand[a]][cand[b]];
      if (!ok) continue;
      for (size_t a = 0; a < cand.size(); ++a)
        for (size_t b = a + 1; b < cand.size(); ++b) used[cand[a]][cand[b]] = true;
      pts.push_back(cand);
    }
    auto arr = line_arrangement(lines, pts);
    auto q = class2_quotient(cf_candidate(arr));
    CHECK(q.g2g3.free_rank() == static_cast<size_t>(v_of(arr)));
    CHECK(q.g2g3.torsion().empty());
  }
  for (int n = 3; n <= 9; ++n) CHECK(class2_quotient(an_presentation(n)).g2g3.free_rank() <= static_cast<size_t>(v_of(an_arrangement(n))));
}
