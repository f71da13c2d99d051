#include "agc/graph.hpp"

#include <algorithm>
#include <set>

#include "agc/errors.hpp"

namespace agc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NotHereditary: return "NotHereditary";
    case Errc::EmptyVertexSet: return "EmptyVertexSet";
    case Errc::NoQualifyingPath: return "NoQualifyingPath";
    case Errc::NotInfiniteEdge: return "NotInfiniteEdge";
    case Errc::NotFiniteEmitter: return "NotFiniteEmitter";
    case Errc::InvalidSplit: return "InvalidSplit";
    case Errc::InMismatch: return "InMismatch";
    case Errc::NotAmplified: return "NotAmplified";
    case Errc::NotSingular: return "NotSingular";
    case Errc::HasBreakingVertex: return "HasBreakingVertex";
    case Errc::EmptyLocallyClosedSet: return "EmptyLocallyClosedSet";
    case Errc::NotUpSet: return "NotUpSet";
    case Errc::NotOpen: return "NotOpen";
    case Errc::UnsupportedGraphClass: return "UnsupportedGraphClass";
    case Errc::TauOutOfRange: return "TauOutOfRange";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Graph::Graph(std::vector<std::string> names,
             std::vector<std::vector<Multiplicity>> mult)
    : names_(std::move(names)), mult_(std::move(mult)) {
  if (mult_.size() != names_.size())
    throw Error(Errc::ParseError, "matrix side does not match vertex count");
  for (const auto& row : mult_)
    if (row.size() != names_.size())
      throw Error(Errc::ParseError, "matrix is not square");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second)
      throw Error(Errc::ParseError, "duplicate vertex name '" + n + "'");
}

Graph Graph::with_default_names(std::vector<std::vector<Multiplicity>> mult) {
  std::vector<std::string> names;
  names.reserve(mult.size());
  for (std::size_t i = 0; i < mult.size(); ++i)
    names.push_back("v" + std::to_string(i + 1));
  return Graph(std::move(names), std::move(mult));
}

bool Graph::has_vertex(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

VertexId Graph::index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw Error(Errc::UnknownVertex, "no vertex named '" + std::string(name) + "'");
  return static_cast<VertexId>(it - names_.begin());
}

Multiplicity Graph::out_total(VertexId i) const {
  Multiplicity total;
  for (VertexId j = 0; j < size(); ++j) total += mult_[i][j];
  return total;
}

Graph amplify(const Graph& g) {
  auto m = g.matrix();
  for (auto& row : m)
    for (auto& e : row)
      if (e.is_positive()) e = kOmega;
  return Graph(g.names(), std::move(m));
}

bool is_amplified(const Graph& g) {
  for (VertexId i = 0; i < g.size(); ++i)
    for (VertexId j = 0; j < g.size(); ++j) {
      auto e = g.mult(i, j);
      if (!e.is_zero() && !e.is_omega()) return false;
    }
  return true;
}

std::vector<std::vector<char>> reachability(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (VertexId i = 0; i < n; ++i) {
    r[i][i] = 1;
    for (VertexId j = 0; j < n; ++j)
      if (g.mult(i, j).is_positive()) r[i][j] = 1;
  }
  for (VertexId k = 0; k < n; ++k)
    for (VertexId i = 0; i < n; ++i)
      if (r[i][k])
        for (VertexId j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

bool reaches(const Graph& g, VertexId u, VertexId v) {
  return reachability(g)[u][v] != 0;
}

bool reaches(const Graph& g, std::string_view u, std::string_view v) {
  return reaches(g, g.index(u), g.index(v));
}

Graph tclose(const Graph& g) {
  const std::size_t n = g.size();
  auto r = reachability(g);
  auto m = g.matrix();
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w = 0; w < n; ++w) {
      if (!m[v][w].is_zero()) continue;
      // nonempty path v -> w: a first edge v -> k with k reaching w
      bool path = false;
      for (VertexId k = 0; k < n && !path; ++k)
        path = g.mult(v, k).is_positive() && r[k][w];
      if (path) m[v][w] = Multiplicity(1);
    }
  return Graph(g.names(), std::move(m));
}

Graph amplified_closure(const Graph& g) { return amplify(tclose(g)); }

VertexSet iota(const Graph& g, VertexId v) {
  auto r = reachability(g);
  VertexSet out;
  for (VertexId w = 0; w < g.size(); ++w)
    if (r[v][w]) out.push_back(w);
  return out;
}

VertexSet iota(const Graph& g, std::string_view v) {
  return iota(g, g.index(v));
}

VertexSet component(const Graph& g, VertexId u) {
  auto r = reachability(g);
  VertexSet out;
  for (VertexId w = 0; w < g.size(); ++w)
    if (r[u][w] && r[w][u]) out.push_back(w);
  return out;
}

VertexSet component(const Graph& g, std::string_view u) {
  return component(g, g.index(u));
}

std::vector<VertexSet> components(const Graph& g) {
  auto r = reachability(g);
  std::vector<char> done(g.size(), 0);
  std::vector<VertexSet> out;
  for (VertexId u = 0; u < g.size(); ++u) {
    if (done[u]) continue;
    VertexSet comp;
    for (VertexId w = u; w < g.size(); ++w)
      if (r[u][w] && r[w][u]) {
        comp.push_back(w);
        done[w] = 1;
      }
    out.push_back(std::move(comp));
  }
  return out;
}

bool set_contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool canonical_set_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_hereditary(const Graph& g, const VertexSet& h) {
  for (VertexId v : h) {
    if (v >= g.size())
      throw Error(Errc::UnknownVertex, "vertex index out of range");
    for (VertexId w = 0; w < g.size(); ++w)
      if (g.mult(v, w).is_positive() && !set_contains(h, w)) return false;
  }
  return true;
}

std::vector<VertexSet> hereditary_sets(const Graph& g) {
  // Hereditary sets are unions of components closed under component
  // reachability; enumerate over 2^#components, not 2^#vertices.
  auto comps = components(g);
  auto r = reachability(g);
  const std::size_t k = comps.size();
  // creach[a][b]: component a reaches component b
  std::vector<std::vector<char>> creach(k, std::vector<char>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      creach[a][b] = r[comps[a][0]][comps[b][0]];

  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    bool closed = true;
    for (std::size_t a = 0; a < k && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < k && closed; ++b)
        if (creach[a][b] && !(mask >> b & 1)) closed = false;
    }
    if (!closed) continue;
    VertexSet h;
    for (std::size_t a = 0; a < k; ++a)
      if (mask >> a & 1)
        h.insert(h.end(), comps[a].begin(), comps[a].end());
    std::sort(h.begin(), h.end());
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), canonical_set_less);
  return out;
}

VertexSet saturate(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h))
    throw Error(Errc::NotHereditary, "saturate requires a hereditary set");
  VertexSet s = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < g.size(); ++v) {
      if (set_contains(s, v)) continue;
      auto total = g.out_total(v);
      if (total.is_zero() || total.is_omega()) continue;  // not regular
      bool range_inside = true;
      for (VertexId w = 0; w < g.size() && range_inside; ++w)
        if (g.mult(v, w).is_positive() && !set_contains(s, w))
          range_inside = false;
      if (range_inside) {
        s.insert(std::lower_bound(s.begin(), s.end(), v), v);
        changed = true;
      }
    }
  }
  return s;
}

bool is_saturated(const Graph& g, const VertexSet& h) {
  return saturate(g, h) == h;
}

bool is_singular(const Graph& g) {
  for (VertexId v = 0; v < g.size(); ++v) {
    auto total = g.out_total(v);
    if (!total.is_zero() && !total.is_omega()) return false;
  }
  return true;
}

namespace {

Graph induced(const Graph& g, const VertexSet& keep) {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (VertexId v : keep) names.push_back(g.name(v));
  std::vector<std::vector<Multiplicity>> m(
      keep.size(), std::vector<Multiplicity>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      m[i][j] = g.mult(keep[i], keep[j]);
  return Graph(std::move(names), std::move(m));
}

}  // namespace

Graph quotient_graph(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h))
    throw Error(Errc::NotHereditary, "quotient requires a hereditary set");
  VertexSet rest;
  for (VertexId v = 0; v < g.size(); ++v)
    if (!set_contains(h, v)) rest.push_back(v);
  return induced(g, rest);
}

Graph restrict_graph(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h))
    throw Error(Errc::NotHereditary, "restriction requires a hereditary set");
  return induced(g, h);
}

}  // namespace agc
