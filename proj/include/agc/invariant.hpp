#ifndef AGC_INVARIANT_HPP
#define AGC_INVARIANT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agc/graph.hpp"

namespace agc {

/// A tau label: an integer, or one of the two infinities.  The graph
/// pipeline only ever emits -1 and positive integers; the infinities are
/// representable for general input spaces.
class Tau {
public:
  constexpr Tau() = default;
  static constexpr Tau finite(std::int64_t v) { return Tau(Kind::Finite, v); }
  static constexpr Tau neg_inf() { return Tau(Kind::NegInf, 0); }
  static constexpr Tau pos_inf() { return Tau(Kind::PosInf, 0); }

  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr std::int64_t value() const { return value_; }  // Finite only

  bool operator==(const Tau&) const = default;

  /// Total order NegInf < finite values < PosInf (for canonical sorting).
  friend bool operator<(const Tau& a, const Tau& b) {
    auto rank = [](const Tau& t) {
      return t.kind_ == Kind::NegInf ? 0 : t.kind_ == Kind::Finite ? 1 : 2;
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return a.value_ < b.value_;
  }

  std::string str() const;

private:
  enum class Kind { Finite, NegInf, PosInf };
  constexpr Tau(Kind k, std::int64_t v) : kind_(k), value_(v) {}
  Kind kind_ = Kind::Finite;
  std::int64_t value_ = 0;
};

/// Finite T0 Alexandrov space with tau labels: the tempered primitive
/// ideal space.  Open sets are the up-sets of leq; origin optionally maps
/// each point back to the graph component it came from.
struct TemperedPrimSpace {
  std::vector<std::string> labels;      // point ids, one per point
  std::vector<std::vector<char>> leq;   // leq[i][j]: point i <= point j
  std::vector<Tau> tau;
  std::optional<std::vector<VertexSet>> origin;

  std::size_t size() const { return labels.size(); }

  /// Throws ParseError if leq is not a partial order or sizes disagree.
  void validate() const;
};

/// Point bijection t1 -> t2 preserving order (both ways) and tau.
using PointWitness = std::vector<std::size_t>;

/// Set of point indices, kept sorted.
using PointSet = std::vector<std::size_t>;

/// The invariant of the amplified graph algebra of g: one point per
/// mutual-reachability component, ordered by reachability, tau = +|comp|
/// for components with a cycle and -1 for cycle-free singletons.
TemperedPrimSpace tempered_prim(const Graph& g);

/// Unitality of the sub-quotient supported on the locally closed set
/// u_open \ v_open.  Requires g amplified, or singular with no breaking
/// vertices.
int sigma(const Graph& g, const PointSet& u_open, const PointSet& v_open);

/// Total invariant string: equal iff the tau-labeled posets are
/// isomorphic.  Exact (refinement plus backtracking), deterministic.
std::string canonical_form(const TemperedPrimSpace& t);

/// Order- and tau-preserving bijection, if one exists.
std::optional<PointWitness> iso_tps(const TemperedPrimSpace& t1,
                                    const TemperedPrimSpace& t2);

/// Decides C*(amplify(g1)) iso C*(amplify(g2)); a witness is a graph
/// isomorphism amplified_closure(g1) -> amplified_closure(g2) given as a
/// vertex-index map.
std::optional<std::vector<VertexId>> iso_amplified(const Graph& g1,
                                                   const Graph& g2);

// --- poset helpers on a TemperedPrimSpace ---

bool is_up_set(const TemperedPrimSpace& t, const PointSet& s);
bool is_convex(const TemperedPrimSpace& t, const PointSet& s);

/// All up-sets, in canonical order.
std::vector<PointSet> up_sets(const TemperedPrimSpace& t);

/// All nonempty convex (locally closed) subsets, in canonical order.
std::vector<PointSet> convex_sets(const TemperedPrimSpace& t);

}  // namespace agc

#endif
