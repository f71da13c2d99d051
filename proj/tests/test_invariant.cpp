#include <algorithm>

#include "agc/errors.hpp"
#include "agc/ideal_lattice.hpp"
#include "agc/invariant.hpp"
#include "agc/oracle.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace agc;

TEST_CASE("tempered_prim of the 5x5 example is a labeled 4-chain") {
  Graph m1 = fixture_graph("m1.agr");
  auto t = tempered_prim(m1);
  REQUIRE(t.size() == 4);
  CHECK(t.tau == std::vector<Tau>{Tau::finite(2), Tau::finite(-1),
                                  Tau::finite(-1), Tau::finite(1)});
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) CHECK(t.leq[a][b] == (a <= b));
  REQUIRE(t.origin.has_value());
  CHECK((*t.origin)[0] == VertexSet{0, 1});
  CHECK((*t.origin)[3] == VertexSet{4});
}

TEST_CASE("tempered_prim base cases") {
  auto lone = tempered_prim(parse_graph_text("1\n0\n"));
  REQUIRE(lone.size() == 1);
  CHECK(lone.tau[0] == Tau::finite(-1));

  auto loop = tempered_prim(parse_graph_text("1\n*\n"));
  CHECK(loop.tau[0] == Tau::finite(1));
}

TEST_CASE("the invariant only sees the amplified transitive closure") {
  for (std::uint64_t code = 0; code < 81; ++code) {
    Graph g = ternary_graph(2, code);
    auto base = canonical_form(tempered_prim(g));
    CHECK(canonical_form(tempered_prim(amplify(g))) == base);
    CHECK(canonical_form(tempered_prim(amplify(tclose(g)))) == base);
  }
}

TEST_CASE("up-sets correspond to hereditary sets by vertex union") {
  for (std::uint64_t code = 0; code < 512; ++code) {
    Graph g = amplified_from_code(3, code);
    auto t = tempered_prim(g);
    std::vector<VertexSet> unions;
    for (const auto& u : up_sets(t)) {
      VertexSet h;
      for (std::size_t p : u) h = set_union(h, (*t.origin)[p]);
      unions.push_back(h);
    }
    std::sort(unions.begin(), unions.end(), canonical_set_less);
    CHECK(unions == hereditary_sets(g));
  }
}

TEST_CASE("canonical_form is relabeling-invariant and order-sensitive") {
  Graph m1 = fixture_graph("m1.agr");
  Graph m2 = fixture_graph("m2.agr");
  CHECK(canonical_form(tempered_prim(m1)) ==
        canonical_form(tempered_prim(m2)));

  // same invariant presented with points in reversed order
  auto t = tempered_prim(m1);
  TemperedPrimSpace rev;
  const std::size_t n = t.size();
  rev.labels = t.labels;
  rev.tau.assign(n, Tau::finite(0));
  rev.leq.assign(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    rev.tau[n - 1 - a] = t.tau[a];
    for (std::size_t b = 0; b < n; ++b)
      rev.leq[n - 1 - a][n - 1 - b] = t.leq[a][b];
  }
  CHECK(canonical_form(rev) == canonical_form(t));

  // 2-point chain vs antichain with equal tau differ
  TemperedPrimSpace chain{{"a", "b"}, {{1, 1}, {0, 1}},
                          {Tau::finite(-1), Tau::finite(-1)}, {}};
  TemperedPrimSpace anti{{"a", "b"}, {{1, 0}, {0, 1}},
                         {Tau::finite(-1), Tau::finite(-1)}, {}};
  CHECK(canonical_form(chain) != canonical_form(anti));
}

TEST_CASE("iso_tps") {
  Graph m1 = fixture_graph("m1.agr");
  Graph m2 = fixture_graph("m2.agr");
  auto t1 = tempered_prim(m1);
  auto t2 = tempered_prim(m2);
  auto w = iso_tps(t1, t2);
  REQUIRE(w.has_value());
  CHECK(*w == PointWitness{0, 1, 2, 3});  // the unique chain map

  TemperedPrimSpace plus{{"p"}, {{1}}, {Tau::finite(1)}, {}};
  TemperedPrimSpace minus{{"p"}, {{1}}, {Tau::finite(-1)}, {}};
  CHECK_FALSE(iso_tps(plus, minus).has_value());
  CHECK(iso_tps(t1, t1).has_value());
}

TEST_CASE("canonical_form equality agrees with iso_tps") {
  std::vector<TemperedPrimSpace> invs;
  for (std::uint64_t code = 0; code < 16; ++code)
    invs.push_back(tempered_prim(amplified_from_code(2, code)));
  for (const auto& a : invs)
    for (const auto& b : invs)
      CHECK((canonical_form(a) == canonical_form(b)) ==
            iso_tps(a, b).has_value());
}

TEST_CASE("iso_amplified produces verified witnesses") {
  Graph m1 = fixture_graph("m1.agr");
  Graph m2 = fixture_graph("m2.agr");
  auto psi = iso_amplified(m1, m2);
  REQUIRE(psi.has_value());
  Graph h1 = amplified_closure(m1);
  Graph h2 = amplified_closure(m2);
  for (VertexId i = 0; i < h1.size(); ++i)
    for (VertexId j = 0; j < h1.size(); ++j)
      CHECK(h1.mult(i, j) == h2.mult((*psi)[i], (*psi)[j]));

  // amplified version of the counterexample graph vs its closure
  Graph amp = parse_graph_text("4\nnames: u x y z\n0 * * 0\n0 0 0 0\n"
                               "0 0 0 *\n0 0 0 0\n");
  CHECK(iso_amplified(amp, amplified_closure(amp)).has_value());

  CHECK_FALSE(iso_amplified(parse_graph_text("1\n*\n"),
                            parse_graph_text("1\n0\n"))
                  .has_value());
}

TEST_CASE("sigma") {
  Graph ux = parse_graph_text("2\nnames: u x\n0 *\n0 0\n");
  // points: p1 = {u}, p2 = {x}; open sets are up-sets, {p2} is open
  CHECK(sigma(ux, {1}, {}) == 0);      // the ideal supported on x is stable
  CHECK(sigma(ux, {0, 1}, {1}) == 1);  // the quotient on u is unital
  CHECK(sigma(ux, {0, 1}, {}) == 1);   // the whole algebra is unital

  CHECK_THROWS_AS((void)sigma(ux, {1}, {1}), Error);  // empty Y
  CHECK_THROWS_AS((void)sigma(ux, {0}, {}), Error);   // {p1} is not open
  CHECK_THROWS_AS((void)sigma(fixture_graph("g_nonsing.agr"), {0}, {}),
                  Error);  // has a breaking vertex: unsupported

  // singular without breaking vertices is supported
  Graph amp = parse_graph_text("2\nnames: u x\n0 *\n0 0\n");
  CHECK(sigma(amp, {1}, {}) == 0);
}

TEST_CASE("sigma on ideals matches the unitality criterion") {
  for (std::uint64_t code = 0; code < 512; ++code) {
    Graph g = amplified_from_code(3, code);
    auto t = tempered_prim(g);
    for (const auto& u : up_sets(t)) {
      if (u.empty()) continue;
      VertexSet h;
      for (std::size_t p : u) h = set_union(h, (*t.origin)[p]);
      CHECK(sigma(g, u, {}) == (ideal_is_unital(g, h) ? 1 : 0));
    }
  }
}

TEST_CASE("convexity helpers") {
  Graph m1 = fixture_graph("m1.agr");
  auto t = tempered_prim(m1);  // a 4-chain
  CHECK(is_up_set(t, {3}));
  CHECK_FALSE(is_up_set(t, {0}));
  CHECK(is_convex(t, {1, 2}));
  CHECK_FALSE(is_convex(t, {0, 2}));
  CHECK(up_sets(t).size() == 5);        // chains have n+1 up-sets
  CHECK(convex_sets(t).size() == 10);   // nonempty intervals of a 4-chain
}
