#include <doctest.h>

#include "clarr/arrangement.hpp"
#include "clarr/io.hpp"
#include "clarr/verify.hpp"
#include "helpers.hpp"

using namespace clarr;
using clarr::io::json;
using clarr::testing::w;

TEST_CASE("word format") {
  CHECK(io::word_to_json(w({3, -2, -2})) == json::parse(R"(["x3","X2","X2"])"));
  CHECK(io::word_from_json(json::parse(R"(["x1","X1","x2"])")) == w({2}));
  CHECK_THROWS_AS(io::word_from_json(json::parse(R"(["y1"])")), io::InputError);
  CHECK_THROWS_AS(io::word_from_json(json::parse(R"(["x0"])")), io::InputError);
  CHECK_THROWS_AS(io::word_from_json(json::parse(R"("x1")")), io::InputError);
}

TEST_CASE("presentation round trip keeps fingerprints") {
  std::vector<FiniteGroupTable> targets{builtin_group("S3"), builtin_group("D4")};
  for (auto p : {verify::printed_m3(), verify::printed_m3cf(), verify::printed_m4(), verify::printed_m4cf(), an_presentation(6),
                 an_odd_reduced(5)}) {
    auto text = io::presentation_to_json(p).dump();
    auto back = io::presentation_from_json(json::parse(text));
    CHECK(back.generators == p.generators);
    CHECK(back.relations == p.relations);
    CHECK(back.index_map == p.index_map);
    CHECK(fingerprint(back, targets) == fingerprint(p, targets));
  }
}

TEST_CASE("event table round trip") {
  for (auto *name : {"A3", "A4"}) {
    auto t = builtin_table(name);
    auto back = io::event_table_from_json(json::parse(io::event_table_to_json(t).dump()));
    CHECK(back.fiber_size == t.fiber_size);
    REQUIRE(back.events.size() == t.events.size());
    for (size_t j = 1; j <= t.events.size(); ++j)
      CHECK(braid_equal(monodromy_braid(back, static_cast<int>(j)), monodromy_braid(t, static_cast<int>(j))));
  }
}

TEST_CASE("arrangement round trip") {
  for (int n : {3, 6, 9}) {
    auto a = an_arrangement(n);
    auto back = io::arrangement_from_json(json::parse(io::arrangement_to_json(a).dump()));
    CHECK(back.slot_map == a.slot_map);
    CHECK(beta(back) == beta(a));
    CHECK(v_of(back) == v_of(a));
    CHECK(cf_candidate(back).relations == cf_candidate(a).relations);
  }
}

TEST_CASE("group round trip") {
  auto g = builtin_group("D4");
  auto back = io::group_from_json(json::parse(io::group_to_json(g).dump()));
  CHECK(back.order() == 8);
  CHECK(back.table() == g.table());
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(io::presentation_from_json(json::parse(R"({"relations": []})")), io::InputError);
  CHECK_THROWS_AS(io::presentation_from_json(json::parse(R"({"generators": 2, "relations": [{"type": "nope"}]})")),
                  io::InputError);
  CHECK_THROWS_AS(io::presentation_from_json(json::parse(R"({"generators": 2, "relations": [{"type": "equality", "lhs": ["x3"], "rhs": []}]})")),
                  io::InputError);
  CHECK_THROWS_AS(io::event_table_from_json(json::parse(R"({"fiber_size": 2, "events": [{"kind": "twist"}]})")), io::InputError);
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"name": "bad", "table": [[0,1],[0,1]]})")), io::InputError);
  CHECK_THROWS_AS(io::load_file("/nonexistent/clarr.json"), io::InputError);
}
