#include <sstream>

#include "agc/errors.hpp"
#include "agc/invariant.hpp"
#include "agc/io.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace agc;

TEST_CASE("graph files: parsing conventions") {
  Graph g = parse_graph_text(
      "# leading comment\n"
      "3  # trailing comment\n"
      "names: a b c\n"
      "\n"
      "0 * 2\n"
      "0 0 inf\n"
      "0 0 0\n");
  CHECK(g.name(0) == "a");
  CHECK(g.mult(0, 1).is_omega());
  CHECK(g.mult(0, 2) == Multiplicity(2));
  CHECK(g.mult(1, 2).is_omega());  // 'inf' accepted on input

  Graph unnamed = parse_graph_text("2\n0 1\n0 0\n");
  CHECK(unnamed.name(0) == "v1");
  CHECK(unnamed.name(1) == "v2");

  CHECK_THROWS_AS((void)parse_graph_text(""), Error);
  CHECK_THROWS_AS((void)parse_graph_text("2\n0 1\n"), Error);
  CHECK_THROWS_AS((void)parse_graph_text("2\n0 1 0\n0 0\n"), Error);
  CHECK_THROWS_AS((void)parse_graph_text("2\nnames: a\n0 1\n0 0\n"), Error);
  CHECK_THROWS_AS((void)parse_graph_text("2\n0 x\n0 0\n"), Error);
  CHECK_THROWS_AS((void)parse_graph_text("1\n0\nextra\n"), Error);
}

TEST_CASE("graph files: parse-serialize fixed point") {
  for (const char* name : {"m1.agr", "m2.agr", "g_nonsing.agr",
                           "e_nonsing.agr"}) {
    Graph g = fixture_graph(name);
    std::string once = serialize_graph(g);
    Graph back = parse_graph_text(once);
    CHECK(back == g);
    CHECK(serialize_graph(back) == once);
  }
  // omega is always written as '*'
  Graph inf = parse_graph_text("1\ninf\n");
  CHECK(serialize_graph(inf) == "1\nnames: v1\n*\n");
}

TEST_CASE("invariant files") {
  TemperedPrimSpace t = parse_tps_text(
      "points: 3\n"
      "tau: 2 -1 +inf\n"
      "le: 1 2\n"
      "le: 2 3\n");
  REQUIRE(t.size() == 3);
  CHECK(t.tau[0] == Tau::finite(2));
  CHECK(t.tau[1] == Tau::finite(-1));
  CHECK(t.tau[2] == Tau::pos_inf());
  CHECK(t.leq[0][2] == 1);  // closure implied
  CHECK(t.leq[2][0] == 0);

  std::string once = serialize_tps(t);
  TemperedPrimSpace back = parse_tps_text(once);
  CHECK(back.tau == t.tau);
  CHECK(back.leq == t.leq);
  CHECK(serialize_tps(back) == once);
  // serialization emits covering pairs only
  CHECK(once == "points: 3\ntau: 2 -1 +inf\nle: 1 2\nle: 2 3\n");

  // a le-cycle collapses T0: rejected
  CHECK_THROWS_AS(
      (void)parse_tps_text("points: 2\ntau: 1 1\nle: 1 2\nle: 2 1\n"), Error);
  CHECK_THROWS_AS((void)parse_tps_text("points: 2\ntau: 1\n"), Error);
  CHECK_THROWS_AS((void)parse_tps_text("points: 2\ntau: 1 1\nle: 1 9\n"),
                  Error);
  CHECK_THROWS_AS((void)parse_tps_text("points: 1\ntau: frog\n"), Error);
}

TEST_CASE("invariant serialization round-trips graph invariants") {
  Graph m1 = fixture_graph("m1.agr");
  auto t = tempered_prim(m1);
  auto back = parse_tps_text(serialize_tps(t));
  CHECK(back.tau == t.tau);
  CHECK(back.leq == t.leq);
  CHECK(canonical_form(back) == canonical_form(t));
}

TEST_CASE("move record files") {
  std::istringstream in(
      "# closure of the first example matrix\n"
      "shortcut v1 v1\n"
      "\n"
      "split v 0 2 1\n"
      "amalg v^0 v^1\n");
  auto recs = parse_moves(in);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].kind == MoveRecord::Kind::Shortcut);
  CHECK(recs[1].counts == std::vector<std::uint64_t>{0, 2, 1});
  CHECK(serialize_moves(recs) ==
        "shortcut v1 v1\nsplit v 0 2 1\namalg v^0 v^1\n");
}
