#ifndef AGC_IO_HPP
#define AGC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "agc/graph.hpp"
#include "agc/invariant.hpp"
#include "agc/moves.hpp"

namespace agc {

// .agr graph files: comment lines with '#', a vertex count, an optional
// "names:" line, then the multiplicity matrix with '*' (or 'inf') for
// omega.  Serialization is byte-stable: fixed ordering, single spaces,
// '\n' endings, '*' on output.

Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph load_graph(const std::string& path);
std::string serialize_graph(const Graph& g);

// .tps invariant files: "points: n", "tau: ...", then "le: a b" lines
// (1-based, reflexive-transitive closure implied).  Serialization emits
// the covering pairs.

TemperedPrimSpace parse_tps(std::istream& in);
TemperedPrimSpace parse_tps_text(const std::string& text);
TemperedPrimSpace load_tps(const std::string& path);
std::string serialize_tps(const TemperedPrimSpace& t);

// move record files: one record per line, '#' comments allowed

std::vector<MoveRecord> parse_moves(std::istream& in);
std::vector<MoveRecord> load_moves(const std::string& path);
std::string serialize_moves(const std::vector<MoveRecord>& recs);

}  // namespace agc

#endif
