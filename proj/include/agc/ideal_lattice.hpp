#ifndef AGC_IDEAL_LATTICE_HPP
#define AGC_IDEAL_LATTICE_HPP

#include <cstdint>
#include <vector>

#include "agc/graph.hpp"

namespace agc {

/// Cardinality class of F_H, the set of paths that enter a hereditary set
/// H exactly at their last edge.
class FCardinality {
public:
  static FCardinality empty() { return FCardinality(Kind::Empty, 0); }
  static FCardinality finite(std::uint64_t n) {
    return FCardinality(Kind::Finite, n);
  }
  static FCardinality infinite() { return FCardinality(Kind::Infinite, 0); }

  bool is_empty() const { return kind_ == Kind::Empty; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  std::uint64_t count() const { return count_; }  // Finite only

  bool operator==(const FCardinality&) const = default;

private:
  enum class Kind { Empty, Finite, Infinite };
  FCardinality(Kind k, std::uint64_t n) : kind_(k), count_(n) {}
  Kind kind_;
  std::uint64_t count_;
};

/// One gauge-invariant ideal: a hereditary saturated set together with a
/// subset of its breaking vertices.
struct AdmissiblePair {
  VertexSet h;
  VertexSet b;
  bool operator==(const AdmissiblePair&) const = default;
};

enum class IdealCountConvention { All, ProperNontrivial };

/// Classify |F_H| for hereditary h.
FCardinality f_class(const Graph& g, const VertexSet& h);

/// Vertices v outside H with infinite out-multiplicity whose bundle of
/// edges avoiding H is finite and nonzero.
VertexSet breaking_vertices(const Graph& g, const VertexSet& h);

/// All (H, B) with H hereditary saturated and B a subset of the breaking
/// vertices of H, in deterministic order.
std::vector<AdmissiblePair> admissible_pairs(const Graph& g);

/// All = number of admissible pairs; ProperNontrivial excludes the zero
/// ideal and the whole algebra.
std::int64_t count_ideals(const Graph& g, IdealCountConvention convention);

/// No vertex lies on exactly one return path.
bool condition_k(const Graph& g);

/// True iff F_H is empty or finite (h hereditary and nonempty).
bool ideal_is_unital(const Graph& g, const VertexSet& h);

/// For singular graphs with no breaking vertices, returns amplify(g);
/// throws NotSingular or HasBreakingVertexError otherwise.
Graph normalize_singular(const Graph& g);

}  // namespace agc

#endif
