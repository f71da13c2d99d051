#ifndef AGC_MOVES_HPP
#define AGC_MOVES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "agc/graph.hpp"

namespace agc {

/// Out-split description: for each out-target w of v, how many of the
/// edges v -> w go to the new vertex v^1 (the rest stay with v^0).
/// The v^1 bundle must be finite and nonempty; the v^0 remainder must be
/// nonempty (omega - k = omega).
struct SplitSpec {
  VertexId vertex;
  std::vector<std::uint64_t> counts;  // one entry per graph vertex
};

/// Serializable move record, one per line in the text format:
///   shortcut u w | addfin u v | split v k1 ... kn | amalg v0 v1
struct MoveRecord {
  enum class Kind { Shortcut, AddFinite, Split, Amalgamate };
  Kind kind;
  std::string u;                       // first vertex argument
  std::string v;                       // second vertex argument (not Split)
  std::vector<std::uint64_t> counts;   // Split only

  std::string str() const;
  static MoveRecord parse(const std::string& line);
};

/// Add an omega edge u -> w, given a path from u to w whose first edge
/// already has multiplicity omega.
Graph add_shortcut(const Graph& g, VertexId u, VertexId w);
Graph add_shortcut(const Graph& g, const std::string& u,
                   const std::string& w);

/// u emits infinitely to the finite emitter v: add an omega bundle from u
/// to every out-target of v.
Graph add_edges_finite(const Graph& g, VertexId u, VertexId v);
Graph add_edges_finite(const Graph& g, const std::string& u,
                       const std::string& v);

/// Replace v by v^0, v^1: out-edges partitioned per the SplitSpec, in-edges
/// duplicated to both halves.  A loop at v contributes its out-end to its
/// partition class and its in-end to both halves.
Graph out_split(const Graph& g, const SplitSpec& spec);

/// Merge v0 and v1 (equal in-edge columns, v1 a finite emitter): out-edges
/// combine, in-edges of v1 are deleted.  If the two names are h^0 and h^1
/// and h is free, the merged vertex is named h.
Graph out_amalgamate(const Graph& g, VertexId v0, VertexId v1);
Graph out_amalgamate(const Graph& g, const std::string& v0,
                     const std::string& v1);

/// amplify(tclose(g)) realized as an explicit shortcut sequence
/// (row-major order over missing transitive edges); replaying the records
/// from g reproduces the returned graph exactly.  Requires g amplified.
std::pair<Graph, std::vector<MoveRecord>> tclose_by_moves(const Graph& g);

Graph apply_move(const Graph& g, const MoveRecord& rec);
Graph apply_moves(const Graph& g, const std::vector<MoveRecord>& recs);

}  // namespace agc

#endif
