#include <algorithm>

#include "agc/errors.hpp"
#include "agc/graph.hpp"
#include "agc/oracle.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace agc;

TEST_CASE("amplify replaces positive entries by omega") {
  Graph g = parse_graph_text("2\n0 2\n0 0\n");
  Graph a = amplify(g);
  CHECK(a.mult(0, 1).is_omega());
  CHECK(a.mult(0, 0).is_zero());
  CHECK(a.mult(1, 0).is_zero());
  CHECK(a.mult(1, 1).is_zero());

  Graph empty = parse_graph_text("2\n0 0\n0 0\n");
  CHECK(amplify(empty) == empty);

  Graph m1 = fixture_graph("m1.agr");
  CHECK(is_amplified(m1));
  CHECK(amplify(m1) == m1);
}

TEST_CASE("is_amplified") {
  CHECK(is_amplified(parse_graph_text("2\n0 *\n0 0\n")));
  CHECK_FALSE(is_amplified(parse_graph_text("2\n0 1\n0 0\n")));
  CHECK_FALSE(is_amplified(fixture_graph("g_nonsing.agr")));
}

TEST_CASE("reaches on a chain") {
  Graph g = parse_graph_text("3\nnames: a b c\n0 1 0\n0 0 1\n0 0 0\n");
  CHECK(reaches(g, "a", "c"));
  CHECK_FALSE(reaches(g, "c", "a"));
  for (VertexId v = 0; v < 3; ++v) CHECK(reaches(g, v, v));
  CHECK_THROWS_AS((void)reaches(g, "a", "nope"), Error);
}

TEST_CASE("tclose adds single edges along paths") {
  Graph chain = parse_graph_text("3\nnames: a b c\n0 1 0\n0 0 1\n0 0 0\n");
  Graph t = tclose(chain);
  CHECK(t.mult(0, 2) == Multiplicity(1));
  CHECK(t.mult(0, 1) == Multiplicity(1));
  CHECK(t.mult(2, 0).is_zero());

  // a two-cycle gains loops at both vertices
  Graph cyc = parse_graph_text("2\n0 1\n1 0\n");
  Graph tc = tclose(cyc);
  CHECK(tc.mult(0, 0) == Multiplicity(1));
  CHECK(tc.mult(1, 1) == Multiplicity(1));
}

TEST_CASE("amplified transitive closure of the first 5x5 example matrix "
          "is the second") {
  Graph m1 = fixture_graph("m1.agr");
  Graph m2 = fixture_graph("m2.agr");
  CHECK(amplified_closure(m1) == m2);
  CHECK(amplify(tclose(m1)) == m2);
}

TEST_CASE("closure operators: idempotence and commutation") {
  // all 2-vertex graphs with entries in {0, 1, omega}
  for (std::uint64_t code = 0; code < 81; ++code) {
    Graph g = ternary_graph(2, code);
    CHECK(amplify(amplify(g)) == amplify(g));
    CHECK(tclose(tclose(g)) == tclose(g));
    CHECK(amplify(tclose(amplify(g))) == amplify(tclose(g)));
    // tclose realizes the reachability relation as edges
    Graph t = tclose(g);
    for (VertexId u = 0; u < 2; ++u)
      for (VertexId v = 0; v < 2; ++v) {
        CHECK(reaches(g, u, v) == reaches(t, u, v));
        bool edge_or_equal = u == v || t.mult(u, v).is_positive();
        CHECK(edge_or_equal == reaches(g, u, v));
      }
  }
}

TEST_CASE("iota closures on the 5x5 example") {
  Graph m1 = fixture_graph("m1.agr");
  CHECK(iota(m1, "v1") == VertexSet{0, 1, 2, 3, 4});
  CHECK(iota(m1, "v3") == VertexSet{2, 3, 4});
  Graph sink = parse_graph_text("1\nnames: s\n0\n");
  CHECK(iota(sink, "s") == VertexSet{0});
}

TEST_CASE("components") {
  Graph m1 = fixture_graph("m1.agr");
  CHECK(component(m1, "v1") == VertexSet{0, 1});
  CHECK(component(m1, "v5") == VertexSet{4});
  auto comps = components(m1);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == VertexSet{0, 1});
  CHECK(comps[3] == VertexSet{4});
  // components partition the vertex set and survive transitive closure
  std::size_t total = 0;
  for (const auto& c : comps) total += c.size();
  CHECK(total == m1.size());
  CHECK(components(tclose(m1)) == comps);
}

TEST_CASE("hereditary sets") {
  Graph g = fixture_graph("g_nonsing.agr");  // u x y z
  auto hs = hereditary_sets(g);
  std::vector<VertexSet> expected = {
      {}, {1}, {3}, {1, 3}, {2, 3}, {1, 2, 3}, {0, 1, 2, 3}};
  CHECK(hs == expected);

  Graph edgeless = parse_graph_text("3\n0 0 0\n0 0 0\n0 0 0\n");
  CHECK(hereditary_sets(edgeless).size() == 8);

  Graph loop = parse_graph_text("1\n1\n");
  CHECK(hereditary_sets(loop).size() == 2);
}

TEST_CASE("hereditary sets form a lattice and absorb iota") {
  for (std::uint64_t code = 0; code < 512; ++code) {
    Graph g = amplified_from_code(3, code);
    auto hs = hereditary_sets(g);
    for (const auto& a : hs)
      for (const auto& b : hs) {
        CHECK(std::find(hs.begin(), hs.end(), set_union(a, b)) != hs.end());
        CHECK(std::find(hs.begin(), hs.end(), set_intersection(a, b)) !=
              hs.end());
        for (VertexId u : a) CHECK(is_subset(iota(g, u), a));
      }
  }
}

TEST_CASE("a hereditary set is an iota image iff it has a largest proper "
          "hereditary subset") {
  for (std::uint64_t code = 0; code < 512; ++code) {
    Graph g = amplified_from_code(3, code);
    auto hs = hereditary_sets(g);
    for (const auto& h : hs) {
      bool is_iota = false;
      for (VertexId u = 0; u < g.size(); ++u)
        is_iota = is_iota || iota(g, u) == h;
      // proper hereditary subsets of h
      std::vector<VertexSet> sub;
      for (const auto& s : hs)
        if (s != h && is_subset(s, h)) sub.push_back(s);
      bool has_largest = false;
      for (const auto& cand : sub) {
        bool top = true;
        for (const auto& s : sub) top = top && is_subset(s, cand);
        has_largest = has_largest || top;
      }
      if (h.empty()) has_largest = false;  // no proper subsets at all
      CHECK(is_iota == has_largest);
    }
  }
}

TEST_CASE("is_singular") {
  CHECK(is_singular(fixture_graph("g_nonsing.agr")));
  CHECK_FALSE(is_singular(parse_graph_text("2\n0 1\n0 0\n")));
  for (std::uint64_t code = 0; code < 512; ++code)
    CHECK(is_singular(amplified_from_code(3, code)));
}

TEST_CASE("quotient and restriction graphs") {
  Graph g = fixture_graph("g_nonsing.agr");  // u x y z
  Graph q = quotient_graph(g, {1, 3});       // drop {x,z}
  REQUIRE(q.size() == 2);
  CHECK(q.name(0) == "u");
  CHECK(q.name(1) == "y");
  CHECK(q.mult(0, 1) == Multiplicity(1));
  CHECK(q.mult(1, 0).is_zero());

  CHECK(quotient_graph(g, {}) == g);
  CHECK(quotient_graph(g, {0, 1, 2, 3}).size() == 0);

  Graph r = restrict_graph(g, {2, 3});  // {y,z}
  REQUIRE(r.size() == 2);
  CHECK(r.mult(0, 1).is_omega());
  CHECK(restrict_graph(g, {0, 1, 2, 3}) == g);
  CHECK(restrict_graph(g, {3}).size() == 1);

  CHECK_THROWS_AS((void)quotient_graph(g, {0}), Error);  // {u} not hereditary
}

TEST_CASE("multiplicity arithmetic saturates") {
  CHECK(Multiplicity(2) + Multiplicity(3) == Multiplicity(5));
  CHECK(kOmega + Multiplicity(1) == kOmega);
  CHECK(kOmega * Multiplicity(0) == Multiplicity(0));
  CHECK(kOmega * Multiplicity(2) == kOmega);
  CHECK(Multiplicity(0) < Multiplicity(1));
  CHECK(Multiplicity(7) < kOmega);
  CHECK(Multiplicity(2).str() == "2");
  CHECK(kOmega.str() == "*");
}
