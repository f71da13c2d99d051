#ifndef AGC_ORACLE_HPP
#define AGC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agc/graph.hpp"

namespace agc {

/// Line-oriented result of a verification sweep: header (parameters),
/// counters, then one `CE ...` line per counterexample.
struct SweepReport {
  std::string sweep;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::uint64_t>> counters;
  std::vector<std::string> counterexamples;

  bool verified() const { return counterexamples.empty(); }
  std::uint64_t counter(const std::string& key) const;
  std::string str() const;
};

/// The amplified graph on n vertices whose row-major {0, omega} matrix is
/// the binary expansion of code (most significant bit first).
Graph amplified_from_code(std::size_t n, std::uint64_t code);

/// All 2^(n*n) amplified graphs on n vertices in lexicographic matrix
/// order.  Practical for n <= 4.
std::vector<Graph> enumerate_amplified(std::size_t n);

/// Exhaustive permutation search (with out/in-degree pruning) for a vertex
/// bijection carrying g1's multiplicity matrix to g2's entrywise.  The
/// returned vector maps g1 indices to g2 indices.
std::optional<std::vector<VertexId>> brute_graph_iso(const Graph& g1,
                                                     const Graph& g2);

/// For every unordered pair (self-pairs included) of amplified graphs with
/// the same vertex count m, for each m in 1..n: checks that the brute-force
/// isomorphism of the amplified transitive closures agrees with isomorphism
/// of the tempered primitive ideal spaces.
SweepReport verify_main_theorem(std::size_t n);

/// Seeded random sweep: shortcut moves on random amplified graphs must
/// leave the canonical form of the invariant unchanged, and every
/// out_split followed by the matching out_amalgamate must return the
/// original graph.  Reports are byte-identical for a fixed seed.
SweepReport fuzz_moves(std::uint64_t seed, std::uint64_t iterations,
                       std::size_t max_vertices);

}  // namespace agc

#endif
