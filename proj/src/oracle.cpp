#include "agc/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "agc/errors.hpp"
#include "agc/invariant.hpp"
#include "agc/moves.hpp"

namespace agc {

std::uint64_t SweepReport::counter(const std::string& key) const {
  for (const auto& [k, v] : counters)
    if (k == key) return v;
  throw Error(Errc::ParseError, "no counter '" + key + "'");
}

std::string SweepReport::str() const {
  std::ostringstream out;
  out << "sweep: " << sweep << "\n";
  for (const auto& [k, v] : parameters) out << k << ": " << v << "\n";
  for (const auto& [k, v] : counters) out << k << ": " << v << "\n";
  out << "verified: " << (verified() ? "yes" : "no") << "\n";
  for (const auto& ce : counterexamples) out << ce << "\n";
  return out.str();
}

Graph amplified_from_code(std::size_t n, std::uint64_t code) {
  std::vector<std::vector<Multiplicity>> m(n, std::vector<Multiplicity>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t bit = n * n - 1 - (i * n + j);
      if ((code >> bit) & 1u) m[i][j] = kOmega;
    }
  return Graph::with_default_names(std::move(m));
}

std::vector<Graph> enumerate_amplified(std::size_t n) {
  std::vector<Graph> out;
  std::uint64_t total = std::uint64_t{1} << (n * n);
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code)
    out.push_back(amplified_from_code(n, code));
  return out;
}

namespace {

// row-major code string for counterexample reporting: '1' per omega entry,
// the entry's count otherwise
std::string graph_code(const Graph& g) {
  std::string s;
  for (VertexId i = 0; i < g.size(); ++i)
    for (VertexId j = 0; j < g.size(); ++j) s += g.mult(i, j).str();
  return s.empty() ? "-" : s;
}

// sorted out-row and in-column multisets, used to prune the permutation
// search
std::vector<std::pair<std::vector<Multiplicity>, std::vector<Multiplicity>>>
degree_signatures(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::pair<std::vector<Multiplicity>, std::vector<Multiplicity>>>
      sig(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = 0; w < n; ++w) {
      sig[v].first.push_back(g.mult(v, w));
      sig[v].second.push_back(g.mult(w, v));
    }
    std::sort(sig[v].first.begin(), sig[v].first.end());
    std::sort(sig[v].second.begin(), sig[v].second.end());
  }
  return sig;
}

bool extend_iso(const Graph& g1, const Graph& g2,
                const std::vector<std::vector<VertexId>>& candidates,
                std::vector<VertexId>& pi, std::vector<char>& used,
                VertexId next) {
  const std::size_t n = g1.size();
  if (next == n) return true;
  for (VertexId w : candidates[next]) {
    if (used[w]) continue;
    bool ok = true;
    for (VertexId p = 0; p < next && ok; ++p)
      ok = g1.mult(next, p) == g2.mult(w, pi[p]) &&
           g1.mult(p, next) == g2.mult(pi[p], w);
    if (ok && g1.mult(next, next) == g2.mult(w, w)) {
      pi[next] = w;
      used[w] = 1;
      if (extend_iso(g1, g2, candidates, pi, used, next + 1)) return true;
      used[w] = 0;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<VertexId>> brute_graph_iso(const Graph& g1,
                                                     const Graph& g2) {
  const std::size_t n = g1.size();
  if (g2.size() != n) return std::nullopt;
  auto sig1 = degree_signatures(g1), sig2 = degree_signatures(g2);

  std::vector<std::vector<VertexId>> candidates(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = 0; w < n; ++w)
      if (sig1[v] == sig2[w]) candidates[v].push_back(w);
    if (candidates[v].empty()) return std::nullopt;
  }
  std::vector<VertexId> pi(n);
  std::vector<char> used(n, 0);
  if (extend_iso(g1, g2, candidates, pi, used, 0)) return pi;
  return std::nullopt;
}

SweepReport verify_main_theorem(std::size_t n) {
  SweepReport rep;
  rep.sweep = "main-theorem";
  rep.parameters.emplace_back("max-vertices", std::to_string(n));

  std::uint64_t graphs_total = 0, pairs_total = 0, agreements_total = 0;
  for (std::size_t m = 1; m <= n; ++m) {
    auto graphs = enumerate_amplified(m);
    std::vector<Graph> closures;
    std::vector<TemperedPrimSpace> invs;
    closures.reserve(graphs.size());
    invs.reserve(graphs.size());
    for (const auto& g : graphs) {
      closures.push_back(amplified_closure(g));
      invs.push_back(tempered_prim(g));
    }

    std::uint64_t pairs = 0, agreements = 0;
    for (std::size_t a = 0; a < graphs.size(); ++a)
      for (std::size_t b = a; b < graphs.size(); ++b) {
        ++pairs;
        bool graph_iso = brute_graph_iso(closures[a], closures[b]).has_value();
        bool inv_iso = iso_tps(invs[a], invs[b]).has_value();
        if (graph_iso == inv_iso) {
          ++agreements;
        } else {
          rep.counterexamples.push_back("CE n=" + std::to_string(m) + " " +
                                        graph_code(graphs[a]) + " " +
                                        graph_code(graphs[b]));
        }
      }
    auto suffix = "-" + std::to_string(m);
    rep.counters.emplace_back("graphs" + suffix, graphs.size());
    rep.counters.emplace_back("pairs" + suffix, pairs);
    rep.counters.emplace_back("agreements" + suffix, agreements);
    graphs_total += graphs.size();
    pairs_total += pairs;
    agreements_total += agreements;
  }
  rep.counters.emplace_back("graphs", graphs_total);
  rep.counters.emplace_back("pairs", pairs_total);
  rep.counters.emplace_back("agreements", agreements_total);
  rep.counters.emplace_back("counterexamples", rep.counterexamples.size());
  return rep;
}

namespace {

// splitmix64 (Steele, Lea & Flood): 64-bit state, full-period, splittable
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace

SweepReport fuzz_moves(std::uint64_t seed, std::uint64_t iterations,
                       std::size_t max_vertices) {
  SweepReport rep;
  rep.sweep = "fuzz-moves";
  rep.parameters.emplace_back("prng", "splitmix64");
  rep.parameters.emplace_back("seed", std::to_string(seed));
  rep.parameters.emplace_back("iterations", std::to_string(iterations));
  rep.parameters.emplace_back("max-vertices", std::to_string(max_vertices));

  SplitMix64 rng{seed};
  std::uint64_t graphs = 0, shortcut_moves = 0, split_moves = 0,
                amalg_moves = 0, canon_changes = 0, round_trip_failures = 0;

  std::uint64_t moves = 0;
  while (moves < iterations) {
    std::size_t n = 1 + static_cast<std::size_t>(rng.below(max_vertices));
    std::uint64_t code = rng.next() & ((std::uint64_t{1} << (n * n)) - 1);
    Graph g = amplified_from_code(n, code);
    ++graphs;
    std::string canon = canonical_form(tempered_prim(g));

    // shortcut moves: the invariant must not move
    std::vector<std::pair<VertexId, VertexId>> eligible;
    auto reach = reachability(g);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId w = 0; w < n; ++w) {
        if (g.mult(u, w).is_positive()) continue;
        for (VertexId v = 0; v < n; ++v)
          if (g.mult(u, v).is_omega() && reach[v][w]) {
            eligible.emplace_back(u, w);
            break;
          }
      }
    Graph cur = g;
    std::size_t steps = eligible.empty() ? 0 : 1 + rng.below(3);
    for (std::size_t s = 0; s < steps; ++s) {
      auto [u, w] = eligible[rng.below(eligible.size())];
      if (cur.mult(u, w).is_positive()) continue;  // added by an earlier step
      cur = add_shortcut(cur, u, w);
      ++shortcut_moves;
      ++moves;
      if (canonical_form(tempered_prim(cur)) != canon) {
        ++canon_changes;
        rep.counterexamples.push_back("CE shortcut " + graph_code(g) + " " +
                                      g.name(u) + " " + g.name(w));
      }
    }

    // split / amalgamate round trip: must restore the graph exactly
    std::vector<VertexId> emitters;
    for (VertexId v = 0; v < n; ++v)
      if (g.out_total(v).is_positive()) emitters.push_back(v);
    if (!emitters.empty()) {
      VertexId v = emitters[rng.below(emitters.size())];
      SplitSpec spec{v, std::vector<std::uint64_t>(n, 0)};
      std::vector<VertexId> targets;
      for (VertexId w = 0; w < n; ++w) {
        if (!g.mult(v, w).is_omega()) continue;
        targets.push_back(w);
        spec.counts[w] = rng.below(4);
      }
      spec.counts[targets[rng.below(targets.size())]] = 1 + rng.below(3);
      Graph split = out_split(g, spec);
      ++split_moves;
      ++moves;
      Graph back = out_amalgamate(split, g.name(v) + "^0", g.name(v) + "^1");
      ++amalg_moves;
      ++moves;
      if (back != g) {
        ++round_trip_failures;
        rep.counterexamples.push_back("CE roundtrip " + graph_code(g) + " " +
                                      g.name(v));
      }
    }
  }

  rep.counters.emplace_back("graphs", graphs);
  rep.counters.emplace_back("moves", moves);
  rep.counters.emplace_back("shortcut-moves", shortcut_moves);
  rep.counters.emplace_back("split-moves", split_moves);
  rep.counters.emplace_back("amalg-moves", amalg_moves);
  rep.counters.emplace_back("canonical-form-changes", canon_changes);
  rep.counters.emplace_back("round-trip-failures", round_trip_failures);
  return rep;
}

}  // namespace agc
