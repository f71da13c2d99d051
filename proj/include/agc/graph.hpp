#ifndef AGC_GRAPH_HPP
#define AGC_GRAPH_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "agc/multiplicity.hpp"

namespace agc {

using VertexId = std::size_t;

/// Sorted, duplicate-free list of vertex indices of some carrier graph.
using VertexSet = std::vector<VertexId>;

/// Finite directed multigraph: named vertices plus a multiplicity matrix.
/// mult(i, j) is the number of edges from vertex i to vertex j; parallel
/// edges carry no identity of their own.  Immutable after construction.
class Graph {
public:
  Graph() = default;
  Graph(std::vector<std::string> names,
        std::vector<std::vector<Multiplicity>> mult);

  /// Default names v1..vn.
  static Graph with_default_names(std::vector<std::vector<Multiplicity>> mult);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const { return names_[v]; }
  bool has_vertex(std::string_view name) const;
  VertexId index(std::string_view name) const;  // throws UnknownVertex

  Multiplicity mult(VertexId i, VertexId j) const { return mult_[i][j]; }
  const std::vector<std::vector<Multiplicity>>& matrix() const {
    return mult_;
  }

  /// Sum of row i, saturating at omega.
  Multiplicity out_total(VertexId i) const;

  bool operator==(const Graph&) const = default;

private:
  std::vector<std::string> names_;
  std::vector<std::vector<Multiplicity>> mult_;
};

// --- amplification and transitive closure ---

/// Replace every positive entry with omega.
Graph amplify(const Graph& g);

/// True iff every entry is 0 or omega.
bool is_amplified(const Graph& g);

/// Add an edge of multiplicity 1 for each ordered pair with a nonempty
/// path but no edge; existing entries are untouched.
Graph tclose(const Graph& g);

/// amplify(tclose(g)); the shape the invariant actually sees.
Graph amplified_closure(const Graph& g);

// --- reachability ---

/// reach[u][v] = (u == v) or a directed path u -> v exists.
std::vector<std::vector<char>> reachability(const Graph& g);

bool reaches(const Graph& g, VertexId u, VertexId v);
bool reaches(const Graph& g, std::string_view u, std::string_view v);

/// Forward-reachability closure of v, including v.
VertexSet iota(const Graph& g, VertexId v);
VertexSet iota(const Graph& g, std::string_view v);

/// Mutual-reachability class of u.
VertexSet component(const Graph& g, VertexId u);
VertexSet component(const Graph& g, std::string_view u);

/// All mutual-reachability classes, ordered by smallest member index.
std::vector<VertexSet> components(const Graph& g);

// --- vertex-set structure ---

bool is_hereditary(const Graph& g, const VertexSet& h);

/// All hereditary subsets in canonical order (size, then lexicographic
/// by sorted vertex indices); always contains the empty and full set.
std::vector<VertexSet> hereditary_sets(const Graph& g);

/// Smallest saturated superset of a hereditary set: repeatedly absorb
/// regular vertices (0 < out-total < omega) whose whole range lies inside.
VertexSet saturate(const Graph& g, const VertexSet& h);

bool is_saturated(const Graph& g, const VertexSet& h);

/// Every vertex is a sink or an infinite emitter.
bool is_singular(const Graph& g);

// --- sub- and quotient graphs (h must be hereditary) ---

/// Vertices G0 \ H; edges into H are dropped.
Graph quotient_graph(const Graph& g, const VertexSet& h);

/// Vertices H with the induced edges (none leave H by hereditariness).
Graph restrict_graph(const Graph& g, const VertexSet& h);

// --- small set helpers ---

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, VertexId v);
bool is_subset(const VertexSet& a, const VertexSet& b);

/// Canonical order used for all set lists: size, then lexicographic.
bool canonical_set_less(const VertexSet& a, const VertexSet& b);

}  // namespace agc

#endif
