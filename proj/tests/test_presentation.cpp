#include <doctest.h>

#include "clarr/finquot.hpp"
#include "clarr/nilpotent.hpp"
#include "clarr/presentation.hpp"
#include "clarr/verify.hpp"
#include "helpers.hpp"

using namespace clarr;
using clarr::testing::w;

namespace {
FreeWord x(int i) { return FreeWord::gen(i); }

uint64_t plain_count(const GroupPresentation &p, const FiniteGroupTable &H) {
  return hom_count(p, H, HomMode::All, {.simplify = false, .threads = 1});
}
}  // namespace

TEST_CASE("expand cyclic") {
  auto two = expand_cyclic(Relation::cyclic_plain({1, 2}));
  REQUIRE(two.size() == 1);
  CHECK(two[0] == Relation::commute(x(1), x(2)));

  auto three = expand_cyclic(Relation::cyclic_plain({1, 2, 3}));
  REQUIRE(three.size() == 2);
  CHECK(three[0] == Relation::commute(x(1), w({3, 2})));
  CHECK(three[1] == Relation::commute(x(2), w({1, 3})));

  for (int t = 2; t <= 7; ++t) {
    std::vector<int> gens;
    for (int i = 1; i <= t; ++i) gens.push_back(i);
    CHECK(expand_cyclic(Relation::cyclic_plain(gens)).size() == static_cast<size_t>(t - 1));
  }
  CHECK_THROWS(expand_cyclic(Relation::cyclic_plain({1})));
}

TEST_CASE("cyclic relation gives cba = bac = acb") {
  // In the quotient by [x3,x4,x5] the three rotations agree: check in every hom to S4.
  GroupPresentation p(5, {Relation::cyclic_plain({3, 4, 5})});
  auto S4 = builtin_group("S4");
  uint64_t homs = 0;
  for_each_hom(p, S4, [&](const std::vector<int> &im) {
    auto val = [&](std::initializer_list<int> l) {
      int r = S4.identity();
      for (int i : l) r = S4.mul(r, im[i - 1]);
      return r;
    };
    CHECK(val({5, 4, 3}) == val({4, 3, 5}));
    CHECK(val({4, 3, 5}) == val({3, 5, 4}));
    ++homs;
  });
  CHECK(homs > 0);
}

TEST_CASE("relator form") {
  auto eq = to_relator_form(GroupPresentation(4, {Relation::equality(x(1), x(4))}));
  REQUIRE(eq.size() == 1);
  CHECK(eq[0] == w({1, -4}));
  auto cm = to_relator_form(GroupPresentation(2, {Relation::commute(x(1), x(2))}));
  REQUIRE(cm.size() == 1);
  CHECK(cm[0] == w({1, 2, -1, -2}));
  auto cy = to_relator_form(GroupPresentation(3, {Relation::cyclic_plain({1, 2, 3})}));
  REQUIRE(cy.size() == 2);
  for (auto &r : cy) CHECK(r.length() == 6);
}

TEST_CASE("cyclic relations do not change the abelianization") {
  for (int t = 2; t <= 6; ++t) {
    std::vector<int> gens;
    for (int i = 1; i <= t; ++i) gens.push_back(i);
    CHECK(abelianize(GroupPresentation(t, {Relation::cyclic_plain(gens)})).str() == "Z^" + std::to_string(t));
  }
}

TEST_CASE("tietze examples") {
  auto a = tietze_simplify(from_relators(2, {w({1, -2})}));
  CHECK(a.generators == 1);
  CHECK(a.relations.empty());
  auto b = tietze_simplify(GroupPresentation(1, {Relation::equality(w({1, -1}), FreeWord())}));
  CHECK(b.generators == 1);
  CHECK(b.relations.empty());
  auto m3 = tietze_simplify(verify::printed_m3());
  CHECK(m3.generators <= 4);
  CHECK(m3.index_map.size() == static_cast<size_t>(m3.generators));
}

TEST_CASE("renumbering keeps relative order") {
  GroupPresentation p(4, {Relation::equality(x(2), x(1)), Relation::commute(x(1), x(3))});
  auto s = tietze_simplify(p);
  CHECK(s.generators == 3);
  CHECK(s.index_map == std::vector<int>{1, 3, 4});
  CHECK(s.relations.size() == 1);
  CHECK(s.relations[0] == Relation::commute(x(1), x(2)));
}

TEST_CASE("kill generator") {
  auto k = kill_generator(GroupPresentation(2, {Relation::commute(x(1), x(2))}), 2);
  CHECK(k.generators == 1);
  CHECK(tietze_simplify(k).relations.empty());
  CHECK_THROWS(kill_generator(GroupPresentation(2), 3));
  CHECK_THROWS(kill_generator(GroupPresentation(2), 0));
  // x1 = x4 is the conic's branch relation in M3: killing x1 kills x4 as well.
  auto m3 = tietze_simplify(kill_generator(verify::printed_m3(), 1));
  CHECK(m3.generators == 3);
}

TEST_CASE("fingerprints are invariant under tietze") {
  std::mt19937 rng(3);
  auto S3 = builtin_group("S3");
  int eliminated = 0;
  for (int t = 0; t < 60; ++t) {
    int g = 3 + t % 2;
    std::vector<FreeWord> rels;
    std::uniform_int_distribution<int> len(1, 5);
    for (int r = 0; r < 2; ++r) rels.push_back(testing::random_word(rng, g, len(rng)));
    // plant a short substitution half of the time
    if (t % 2 == 0) rels.push_back(x(g) * testing::random_word(rng, g - 1, 2).inverse());
    auto p = from_relators(g, rels);
    auto s = tietze_simplify(p);
    if (s.generators < p.generators) ++eliminated;
    CHECK(plain_count(p, S3) == plain_count(s, S3));
    for (int j = 1; j <= s.generators; ++j) {
      int i = s.index_map[j - 1];
      CHECK(plain_count(kill_generator(s, j), S3) == plain_count(kill_generator(p, i), S3));
      CHECK(plain_count(tietze_simplify(kill_generator(p, i)), S3) == plain_count(kill_generator(p, i), S3));
    }
  }
  CHECK(eliminated > 10);
}
