#include "agc/ideal_lattice.hpp"

#include <algorithm>

#include "agc/errors.hpp"

namespace agc {

FCardinality f_class(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h))
    throw Error(Errc::NotHereditary, "f_class requires a hereditary set");
  const std::size_t n = g.size();

  // Crossing edges: from outside H into H.
  struct Crossing {
    VertexId src;
    Multiplicity m;
  };
  std::vector<Crossing> crossing;
  for (VertexId v = 0; v < n; ++v) {
    if (set_contains(h, v)) continue;
    for (VertexId w = 0; w < n; ++w)
      if (set_contains(h, w) && g.mult(v, w).is_positive())
        crossing.push_back({v, g.mult(v, w)});
  }
  if (crossing.empty()) return FCardinality::empty();
  for (const auto& c : crossing)
    if (c.m.is_omega()) return FCardinality::infinite();

  // Path prefixes live in the complement; only vertices that can reach a
  // crossing-edge source matter.
  std::vector<VertexId> comp;  // complement vertices
  for (VertexId v = 0; v < n; ++v)
    if (!set_contains(h, v)) comp.push_back(v);
  auto r = reachability(g);  // restricted paths below stay in complement
                             // automatically: h is hereditary, so no path
                             // re-enters the complement once inside h
  std::vector<char> relevant(n, 0);
  for (VertexId v : comp)
    for (const auto& c : crossing)
      if (r[v][c.src]) relevant[v] = 1;

  // An omega edge or a cycle among relevant complement vertices gives
  // infinitely many prefixes.
  for (VertexId u : comp) {
    if (!relevant[u]) continue;
    for (VertexId w : comp) {
      if (!relevant[w] || !g.mult(u, w).is_positive()) continue;
      if (g.mult(u, w).is_omega()) return FCardinality::infinite();
      if (r[w][u]) return FCardinality::infinite();  // cycle through u, w
    }
    if (g.mult(u, u).is_positive()) return FCardinality::infinite();
  }

  // Acyclic, finite multiplicities: count weighted prefixes in topological
  // order.  prefixes[v] counts paths inside the complement ending at v,
  // including the empty path.
  std::vector<VertexId> order;  // relevant vertices, sources first
  {
    std::vector<char> placed(n, 0);
    bool progress = true;
    while (progress) {
      progress = false;
      for (VertexId v : comp) {
        if (!relevant[v] || placed[v]) continue;
        bool ready = true;
        for (VertexId u : comp)
          if (relevant[u] && !placed[u] && g.mult(u, v).is_positive())
            ready = false;
        if (ready) {
          order.push_back(v);
          placed[v] = 1;
          progress = true;
        }
      }
    }
  }
  std::vector<std::uint64_t> prefixes(n, 0);
  for (VertexId v : order) {
    std::uint64_t total = 1;
    for (VertexId u : comp)
      if (relevant[u] && g.mult(u, v).is_positive())
        total += g.mult(u, v).count() * prefixes[u];
    prefixes[v] = total;
  }
  std::uint64_t count = 0;
  for (const auto& c : crossing) count += c.m.count() * prefixes[c.src];
  return FCardinality::finite(count);
}

VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h))
    throw Error(Errc::NotHereditary,
                "breaking_vertices requires a hereditary set");
  VertexSet out;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (set_contains(h, v)) continue;
    if (!g.out_total(v).is_omega()) continue;
    Multiplicity avoiding;
    for (VertexId w = 0; w < g.size(); ++w)
      if (!set_contains(h, w)) avoiding += g.mult(v, w);
    if (avoiding.is_positive() && !avoiding.is_omega()) out.push_back(v);
  }
  return out;
}

std::vector<AdmissiblePair> admissible_pairs(const Graph& g) {
  std::vector<AdmissiblePair> out;
  for (const auto& h : hereditary_sets(g)) {
    if (!is_saturated(g, h)) continue;
    auto bv = breaking_vertices(g, h);
    std::vector<VertexSet> subsets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bv.size());
         ++mask) {
      VertexSet b;
      for (std::size_t i = 0; i < bv.size(); ++i)
        if (mask >> i & 1) b.push_back(bv[i]);
      subsets.push_back(std::move(b));
    }
    std::sort(subsets.begin(), subsets.end(), canonical_set_less);
    for (auto& b : subsets) out.push_back({h, std::move(b)});
  }
  return out;
}

std::int64_t count_ideals(const Graph& g, IdealCountConvention convention) {
  auto all = static_cast<std::int64_t>(admissible_pairs(g).size());
  return convention == IdealCountConvention::All ? all : all - 2;
}

bool condition_k(const Graph& g) {
  // Fails iff some strongly connected component is a single simple cycle
  // with all multiplicities 1: then each of its vertices has exactly one
  // return path.
  for (const auto& comp : components(g)) {
    bool has_cycle = comp.size() >= 2 || g.mult(comp[0], comp[0]).is_positive();
    if (!has_cycle) continue;
    bool simple_cycle = true;
    for (VertexId v : comp) {
      Multiplicity inside;
      for (VertexId w : comp) inside += g.mult(v, w);
      if (inside != Multiplicity(1)) {
        simple_cycle = false;
        break;
      }
    }
    if (simple_cycle) return false;
  }
  return true;
}

bool ideal_is_unital(const Graph& g, const VertexSet& h) {
  if (h.empty())
    throw Error(Errc::EmptyVertexSet, "ideal_is_unital requires nonempty h");
  return !f_class(g, h).is_infinite();
}

Graph normalize_singular(const Graph& g) {
  if (!is_singular(g))
    throw Error(Errc::NotSingular,
                "normalize_singular requires a singular graph");
  for (const auto& h : hereditary_sets(g)) {
    if (!is_saturated(g, h)) continue;
    auto bv = breaking_vertices(g, h);
    if (!bv.empty()) {
      std::string what = "vertex '" + g.name(bv[0]) + "' breaks {";
      for (std::size_t i = 0; i < h.size(); ++i)
        what += (i ? "," : "") + g.name(h[i]);
      what += "}";
      throw HasBreakingVertexError(h, bv[0], what);
    }
  }
  return amplify(g);
}

}  // namespace agc
