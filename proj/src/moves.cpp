#include "agc/moves.hpp"

#include <algorithm>
#include <sstream>

#include "agc/errors.hpp"

namespace agc {

std::string MoveRecord::str() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Shortcut: out << "shortcut " << u << " " << v; break;
    case Kind::AddFinite: out << "addfin " << u << " " << v; break;
    case Kind::Split:
      out << "split " << u;
      for (auto c : counts) out << " " << c;
      break;
    case Kind::Amalgamate: out << "amalg " << u << " " << v; break;
  }
  return out.str();
}

MoveRecord MoveRecord::parse(const std::string& line) {
  std::istringstream in(line);
  std::string op;
  if (!(in >> op)) throw Error(Errc::ParseError, "empty move record");
  MoveRecord rec;
  if (op == "shortcut" || op == "addfin" || op == "amalg") {
    rec.kind = op == "shortcut" ? Kind::Shortcut
               : op == "addfin" ? Kind::AddFinite
                                : Kind::Amalgamate;
    if (!(in >> rec.u >> rec.v))
      throw Error(Errc::ParseError, "move '" + op + "' needs two vertices");
  } else if (op == "split") {
    rec.kind = Kind::Split;
    if (!(in >> rec.u))
      throw Error(Errc::ParseError, "split needs a vertex");
    std::uint64_t k;
    while (in >> k) rec.counts.push_back(k);
  } else {
    throw Error(Errc::ParseError, "unknown move '" + op + "'");
  }
  std::string extra;
  if (in.clear(), in >> extra)
    throw Error(Errc::ParseError, "trailing tokens in move record");
  return rec;
}

Graph add_shortcut(const Graph& g, VertexId u, VertexId w) {
  auto r = reachability(g);
  bool qualifies = false;
  for (VertexId v = 0; v < g.size() && !qualifies; ++v)
    qualifies = g.mult(u, v).is_omega() && r[v][w];
  if (!qualifies)
    throw Error(Errc::NoQualifyingPath,
                "no path " + g.name(u) + " -> " + g.name(w) +
                    " starting with an omega edge");
  auto m = g.matrix();
  m[u][w] = kOmega;
  return Graph(g.names(), std::move(m));
}

Graph add_shortcut(const Graph& g, const std::string& u,
                   const std::string& w) {
  return add_shortcut(g, g.index(u), g.index(w));
}

Graph add_edges_finite(const Graph& g, VertexId u, VertexId v) {
  if (!g.mult(u, v).is_omega())
    throw Error(Errc::NotInfiniteEdge,
                g.name(u) + " does not emit infinitely to " + g.name(v));
  auto total = g.out_total(v);
  if (total.is_zero() || total.is_omega())
    throw Error(Errc::NotFiniteEmitter,
                g.name(v) + " is not a finite emitter");
  auto m = g.matrix();
  for (VertexId w = 0; w < g.size(); ++w)
    if (g.mult(v, w).is_positive()) m[u][w] = kOmega;
  return Graph(g.names(), std::move(m));
}

Graph add_edges_finite(const Graph& g, const std::string& u,
                       const std::string& v) {
  return add_edges_finite(g, g.index(u), g.index(v));
}

Graph out_split(const Graph& g, const SplitSpec& spec) {
  const std::size_t n = g.size();
  const VertexId v = spec.vertex;
  if (v >= n) throw Error(Errc::UnknownVertex, "split vertex out of range");
  if (spec.counts.size() != n)
    throw Error(Errc::InvalidSplit, "split needs one count per vertex");

  std::uint64_t total = 0;
  bool remainder = false;
  for (VertexId w = 0; w < n; ++w) {
    auto m = g.mult(v, w);
    std::uint64_t k = spec.counts[w];
    if (k > 0 && !m.is_omega() && k > m.count())
      throw Error(Errc::InvalidSplit,
                  "split count exceeds multiplicity towards " + g.name(w));
    total += k;
    if (m.is_omega() || m.count() > k) remainder = true;
  }
  if (total == 0)
    throw Error(Errc::InvalidSplit, "split class E1 must be nonempty");
  if (!remainder)
    throw Error(Errc::InvalidSplit, "split class E0 must be nonempty");

  std::string n0 = g.name(v) + "^0", n1 = g.name(v) + "^1";
  if (g.has_vertex(n0) || g.has_vertex(n1))
    throw Error(Errc::InvalidSplit, "split vertex names are taken");

  // v is replaced in place by v^0 followed by v^1.
  std::vector<std::string> names;
  std::vector<VertexId> old_of;  // new index -> old index (v for both halves)
  for (VertexId a = 0; a < n; ++a) {
    if (a == v) {
      names.push_back(n0);
      names.push_back(n1);
      old_of.push_back(v);
      old_of.push_back(v);
    } else {
      names.push_back(g.name(a));
      old_of.push_back(a);
    }
  }
  const VertexId i0 = v, i1 = v + 1;
  const std::size_t nn = n + 1;

  auto piece = [&](VertexId half, VertexId old_target) {
    // out-multiplicity of the given half towards old_target
    auto m = g.mult(v, old_target);
    std::uint64_t k = spec.counts[old_target];
    if (half == i1) return Multiplicity(k);
    return m.is_omega() ? kOmega : Multiplicity(m.count() - k);
  };

  std::vector<std::vector<Multiplicity>> mm(nn,
                                            std::vector<Multiplicity>(nn));
  for (VertexId a = 0; a < nn; ++a)
    for (VertexId b = 0; b < nn; ++b) {
      bool a_half = a == i0 || a == i1;
      bool b_half = b == i0 || b == i1;
      if (a_half && b_half) {
        // loops at v: out-end follows the class, in-end duplicates
        mm[a][b] = piece(a, v);
      } else if (a_half) {
        mm[a][b] = piece(a, old_of[b]);
      } else if (b_half) {
        mm[a][b] = g.mult(old_of[a], v);  // in-edges duplicated
      } else {
        mm[a][b] = g.mult(old_of[a], old_of[b]);
      }
    }
  return Graph(std::move(names), std::move(mm));
}

namespace {

std::string merged_name(const Graph& g, VertexId v0, VertexId v1) {
  const std::string& a = g.name(v0);
  const std::string& b = g.name(v1);
  if (a.size() > 2 && b.size() > 2 && a.ends_with("^0") && b.ends_with("^1")) {
    std::string stem = a.substr(0, a.size() - 2);
    if (stem == b.substr(0, b.size() - 2) && !g.has_vertex(stem)) return stem;
  }
  return a;
}

}  // namespace

Graph out_amalgamate(const Graph& g, VertexId v0, VertexId v1) {
  const std::size_t n = g.size();
  if (v0 >= n || v1 >= n)
    throw Error(Errc::UnknownVertex, "amalgamation vertex out of range");
  if (v0 == v1)
    throw Error(Errc::InvalidSplit, "cannot amalgamate a vertex with itself");
  auto total = g.out_total(v1);
  if (total.is_zero() || total.is_omega())
    throw Error(Errc::NotFiniteEmitter,
                g.name(v1) + " is not a finite emitter");
  for (VertexId u = 0; u < n; ++u)
    if (g.mult(u, v0) != g.mult(u, v1))
      throw Error(Errc::InMismatch,
                  "in-edge columns of " + g.name(v0) + " and " + g.name(v1) +
                      " differ at " + g.name(u));

  std::vector<std::string> names;
  std::vector<VertexId> old_of;
  for (VertexId a = 0; a < n; ++a) {
    if (a == v1) continue;
    names.push_back(a == v0 ? merged_name(g, v0, v1) : g.name(a));
    old_of.push_back(a);
  }
  const std::size_t nn = n - 1;
  std::vector<std::vector<Multiplicity>> mm(nn,
                                            std::vector<Multiplicity>(nn));
  for (std::size_t a = 0; a < nn; ++a)
    for (std::size_t b = 0; b < nn; ++b) {
      VertexId oa = old_of[a], ob = old_of[b];
      if (oa == v0 && ob == v0) {
        mm[a][b] = g.mult(v0, v0) + g.mult(v1, v0);
      } else if (oa == v0) {
        mm[a][b] = g.mult(v0, ob) + g.mult(v1, ob);
      } else if (ob == v0) {
        mm[a][b] = g.mult(oa, v0);  // v1's in-edges are deleted
      } else {
        mm[a][b] = g.mult(oa, ob);
      }
    }
  return Graph(std::move(names), std::move(mm));
}

Graph out_amalgamate(const Graph& g, const std::string& v0,
                     const std::string& v1) {
  return out_amalgamate(g, g.index(v0), g.index(v1));
}

std::pair<Graph, std::vector<MoveRecord>> tclose_by_moves(const Graph& g) {
  if (!is_amplified(g))
    throw Error(Errc::NotAmplified, "tclose_by_moves needs an amplified graph");
  Graph target = amplified_closure(g);
  Graph cur = g;
  std::vector<MoveRecord> recs;
  for (VertexId v = 0; v < g.size(); ++v)
    for (VertexId w = 0; w < g.size(); ++w) {
      if (g.mult(v, w).is_positive() || !target.mult(v, w).is_positive())
        continue;
      cur = add_shortcut(cur, v, w);
      recs.push_back({MoveRecord::Kind::Shortcut, g.name(v), g.name(w), {}});
    }
  return {std::move(cur), std::move(recs)};
}

Graph apply_move(const Graph& g, const MoveRecord& rec) {
  switch (rec.kind) {
    case MoveRecord::Kind::Shortcut: return add_shortcut(g, rec.u, rec.v);
    case MoveRecord::Kind::AddFinite: return add_edges_finite(g, rec.u, rec.v);
    case MoveRecord::Kind::Split:
      return out_split(g, {g.index(rec.u), rec.counts});
    case MoveRecord::Kind::Amalgamate: return out_amalgamate(g, rec.u, rec.v);
  }
  throw Error(Errc::ParseError, "bad move kind");
}

Graph apply_moves(const Graph& g, const std::vector<MoveRecord>& recs) {
  Graph cur = g;
  for (const auto& rec : recs) cur = apply_move(cur, rec);
  return cur;
}

}  // namespace agc
