#ifndef AGC_REALIZE_HPP
#define AGC_REALIZE_HPP

#include <map>

#include "agc/graph.hpp"
#include "agc/invariant.hpp"

namespace agc {

/// Target for realization: a finite T0 space with tau values in
/// {-1} ∪ {1, 2, 3, ...} (no origin map).
using TargetSpec = TemperedPrimSpace;

/// Throws TauOutOfRange unless every tau value is -1 or positive finite.
void check_realizable(const TargetSpec& t);

/// Opposite Hasse diagram of the order: vertices are the points, one edge
/// x -> y per covering relation x < y.
Graph hasse(const TargetSpec& t);

/// An amplified graph whose tempered primitive ideal space is t: a block
/// of tau(v) fully connected vertices per positive point, a single loop-
/// free vertex per tau = -1 point, blocks wired along Hasse edges through
/// each block's first vertex.  Vertex names are "<point>.<index>".
Graph realize(const TargetSpec& t);

/// Invariant of a unital extension: ambient order with tau = f_ideal on
/// the open set and f_quotient on its complement.
TargetSpec extension_invariant(const TargetSpec& ambient,
                               const PointSet& u_open,
                               const std::map<std::size_t, Tau>& f_ideal,
                               const std::map<std::size_t, Tau>& f_quotient);

}  // namespace agc

#endif
