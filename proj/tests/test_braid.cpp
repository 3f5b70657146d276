#include <doctest.h>

#include "clarr/braid.hpp"
#include "helpers.hpp"

using namespace clarr;
using clarr::testing::w;

TEST_CASE("free reduction") {
  CHECK(w({1, -1}).empty());
  CHECK(w({1, 2, 2, 1}) == FreeWord({{1, 1}, {2, 2}, {1, 1}}));
  CHECK(w({1, 2, -2, 1}) == FreeWord::gen(1, 2));
  CHECK(w({1, 2, -2, 1}).str() == "x1^2");
  CHECK_THROWS_AS(free_reduce({{3, 1}}, 2), std::out_of_range);
  CHECK_THROWS_AS(free_reduce({{0, 1}}, 2), std::out_of_range);
}

TEST_CASE("reduction is idempotent and a monoid operation") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto a = testing::random_word(rng, 4, 12), b = testing::random_word(rng, 4, 12), c = testing::random_word(rng, 4, 12);
    auto raw = a.expand();
    CHECK(static_cast<int64_t>(raw.size()) == a.length());
    CHECK(FreeWord::from_signed(raw) == a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).length() <= a.length() + b.length());
    CHECK((a * a.inverse()).empty());
    CHECK(a * FreeWord() == a);
  }
}

TEST_CASE("single-letter Artin action") {
  Braid s1(2, {1});
  CHECK(artin_act(s1, w({1})) == w({1, 2, -1}));
  CHECK(artin_act(s1, w({2})) == w({1}));
  CHECK(artin_act(s1.pow(2), w({2})) == w({1, 2, -1}));
  CHECK(artin_act(s1.inverse(), artin_act(s1, w({1, 2}))) == w({1, 2}));
}

TEST_CASE("rightmost letter acts first") {
  // sigma1 sigma2 on x3: sigma2 sends x3 to x2, then sigma1 sends x2 to x1.
  CHECK(artin_act(Braid(3, {1, 2}), w({3})) == w({1}));
  CHECK(artin_act(Braid(3, {2, 1}), w({3})) == w({2}));
  CHECK(artin_act(Braid(3, {2, 1}), w({1})) == w({1, 2, 3, -2, -1}));
}

TEST_CASE("Artin action is an automorphism") {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    int m = 2 + t % 6;
    auto b = testing::random_braid(rng, m, 10);
    auto u = testing::random_word(rng, m, 8), v = testing::random_word(rng, m, 8);
    CHECK(artin_act(b, u * v) == artin_act(b, u) * artin_act(b, v));
    CHECK(artin_act(b.inverse(), artin_act(b, u)) == u);
    CHECK(artin_act(b, artin_act(b.inverse(), u)) == u);
  }
}

TEST_CASE("braid equality") {
  CHECK(braid_equal(Braid(3, {1, 2, 1}), Braid(3, {2, 1, 2})));
  CHECK(braid_equal(Braid(4, {1, 3}), Braid(4, {3, 1})));
  CHECK_FALSE(braid_equal(Braid(3, {1}), Braid(3, {2})));
  CHECK_THROWS(braid_equal(Braid(3, {1}), Braid(4, {1})));
  for (int m = 3; m <= 8; ++m)
    for (int i = 1; i < m; ++i) {
      if (i + 1 < m) CHECK(braid_equal(Braid(m, {i, i + 1, i}), Braid(m, {i + 1, i, i + 1})));
      for (int j = i + 2; j < m; ++j) CHECK(braid_equal(Braid(m, {i, j}), Braid(m, {j, i})));
    }
}

TEST_CASE("Garside element") {
  CHECK(garside(2).letters == std::vector<int>{1});
  CHECK(garside(3).letters == std::vector<int>{2, 1, 2});
  CHECK(garside(4).letters == std::vector<int>{3, 2, 3, 1, 2, 3});
  CHECK_THROWS(garside(1));
  for (int m = 2; m <= 8; ++m) {
    auto d = garside(m);
    CHECK(d.letters.size() == static_cast<size_t>(m * (m - 1) / 2));
    for (int i = 1; i < m; ++i) CHECK(braid_equal(d * Braid(m, {i}) * d.inverse(), Braid(m, {m - i})));
    auto full = d.pow(2);
    FreeWord prod;
    for (int i = 1; i <= m; ++i) prod *= FreeWord::gen(i);
    CHECK(artin_act(full, prod) == prod);
    for (int i = 1; i <= m; ++i) {
      // image is a conjugate of x_i: exponent vector is e_i and the cyclic reduction is x_i
      auto img = artin_act(full, FreeWord::gen(i));
      CHECK(img.cyclic_reduce() == FreeWord::gen(i));
    }
  }
}

TEST_CASE("block half twists") {
  CHECK(half_twist_block(1, 2, 2).letters == std::vector<int>{1});
  CHECK(braid_equal(half_twist_block(1, 3, 5), Braid(5, {2, 1, 2})));
  CHECK(braid_equal(half_twist_block(3, 5, 5), Braid(5, {4, 3, 4})));
  CHECK_THROWS(half_twist_block(3, 3, 5));
  CHECK_THROWS(half_twist_block(2, 6, 5));
  auto h = half_twist_block(2, 4, 6);
  for (int i : {5})
    CHECK(braid_equal(h * Braid(6, {i}), Braid(6, {i}) * h));
}

TEST_CASE("delta prime") {
  CHECK(delta_prime(2).letters == std::vector<int>{3, 2, 3, 1, 3, 2, 3});
  CHECK(delta_prime(2).strands == 4);
  CHECK(delta_prime(3).letters == std::vector<int>{4, 3, 4, 2, 4, 3, 4, 1, 2, 4, 3, 4});
  CHECK_THROWS(delta_prime(1));
  for (int n = 2; n <= 8; ++n) CHECK(delta_prime(n).letters.size() == static_cast<size_t>(3 * n + n * (n - 1) / 2));
}

TEST_CASE("delta prime identity") {
  auto rows = verify_lemma_delta(8);
  REQUIRE(rows.size() == 7);
  for (auto &r : rows) CHECK(r.equal);
  // direct restatement
  for (int n = 2; n <= 8; ++n) {
    std::vector<int> tail;
    for (int i = 2; i <= n; ++i) tail.push_back(i);
    CHECK(braid_equal(delta_prime(n), garside(n + 2) * Braid(n + 2, tail)));
  }
}
