#include "agc/invariant.hpp"

#include <algorithm>
#include <map>

#include "agc/errors.hpp"
#include "agc/ideal_lattice.hpp"

namespace agc {

std::string Tau::str() const {
  if (is_neg_inf()) return "-inf";
  if (is_pos_inf()) return "+inf";
  return std::to_string(value_);
}

void TemperedPrimSpace::validate() const {
  const std::size_t n = labels.size();
  if (leq.size() != n || tau.size() != n)
    throw Error(Errc::ParseError, "tempered space field sizes disagree");
  for (const auto& row : leq)
    if (row.size() != n)
      throw Error(Errc::ParseError, "leq relation is not square");
  for (std::size_t i = 0; i < n; ++i)
    if (!leq[i][i]) throw Error(Errc::ParseError, "leq is not reflexive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw Error(Errc::ParseError, "leq is not antisymmetric (not T0)");
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k])
          throw Error(Errc::ParseError, "leq is not transitive");
    }
}

TemperedPrimSpace tempered_prim(const Graph& g) {
  auto comps = components(g);
  auto r = reachability(g);
  const std::size_t k = comps.size();

  TemperedPrimSpace t;
  t.labels.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    t.labels.push_back("p" + std::to_string(i + 1));
  t.leq.assign(k, std::vector<char>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      t.leq[a][b] = r[comps[a][0]][comps[b][0]];
  t.tau.reserve(k);
  for (const auto& comp : comps) {
    bool cyclic = comp.size() >= 2 || g.mult(comp[0], comp[0]).is_positive();
    t.tau.push_back(cyclic ? Tau::finite(static_cast<std::int64_t>(comp.size()))
                           : Tau::finite(-1));
  }
  t.origin = comps;
  return t;
}

bool is_up_set(const TemperedPrimSpace& t, const PointSet& s) {
  for (std::size_t p : s)
    for (std::size_t q = 0; q < t.size(); ++q)
      if (t.leq[p][q] && !std::binary_search(s.begin(), s.end(), q))
        return false;
  return true;
}

bool is_convex(const TemperedPrimSpace& t, const PointSet& s) {
  auto in = [&](std::size_t p) {
    return std::binary_search(s.begin(), s.end(), p);
  };
  for (std::size_t x : s)
    for (std::size_t z : s)
      for (std::size_t y = 0; y < t.size(); ++y)
        if (!in(y) && t.leq[x][y] && t.leq[y][z]) return false;
  return true;
}

namespace {

std::vector<PointSet> subsets_where(const TemperedPrimSpace& t,
                                    bool (*pred)(const TemperedPrimSpace&,
                                                 const PointSet&),
                                    bool include_empty) {
  const std::size_t n = t.size();
  std::vector<PointSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!include_empty && mask == 0) continue;
    PointSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (pred(t, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<PointSet> up_sets(const TemperedPrimSpace& t) {
  return subsets_where(t, &is_up_set, true);
}

std::vector<PointSet> convex_sets(const TemperedPrimSpace& t) {
  return subsets_where(t, &is_convex, false);
}

int sigma(const Graph& g, const PointSet& u_open, const PointSet& v_open) {
  bool supported = is_amplified(g);
  if (!supported && is_singular(g)) {
    supported = true;
    for (const auto& h : hereditary_sets(g)) {
      if (!is_saturated(g, h)) continue;
      if (!breaking_vertices(g, h).empty()) {
        supported = false;
        break;
      }
    }
  }
  if (!supported)
    throw Error(Errc::UnsupportedGraphClass,
                "sigma needs an amplified graph, or a singular one without "
                "breaking vertices");

  auto t = tempered_prim(g);
  if (!is_up_set(t, u_open) || !is_up_set(t, v_open))
    throw Error(Errc::NotUpSet, "sigma arguments must be open (up-sets)");
  if (!std::includes(u_open.begin(), u_open.end(), v_open.begin(),
                     v_open.end()))
    throw Error(Errc::NotUpSet, "v_open must be contained in u_open");
  PointSet y;
  std::set_difference(u_open.begin(), u_open.end(), v_open.begin(),
                      v_open.end(), std::back_inserter(y));
  if (y.empty())
    throw Error(Errc::EmptyLocallyClosedSet, "sigma is undefined on the "
                                             "empty locally closed set");

  const auto& comps = *t.origin;
  std::vector<char> in_hu(g.size(), 0), in_y(g.size(), 0);
  for (std::size_t p : u_open)
    for (VertexId v : comps[p]) in_hu[v] = 1;
  for (std::size_t p : y)
    for (VertexId v : comps[p]) in_y[v] = 1;

  // Unital iff no edge enters the supporting vertex set from outside H_U.
  for (VertexId a = 0; a < g.size(); ++a) {
    if (in_hu[a]) continue;
    for (VertexId b = 0; b < g.size(); ++b)
      if (in_y[b] && g.mult(a, b).is_positive()) return 0;
  }
  return 1;
}

namespace {

// Signature-based color refinement; returns cells of interchangeable
// points, deterministically ordered.
std::vector<std::vector<std::size_t>> refine_cells(
    const TemperedPrimSpace& t) {
  const std::size_t n = t.size();
  using Sig = std::vector<std::int64_t>;
  std::vector<std::size_t> color(n, 0);

  auto assign = [&](std::vector<Sig>& sigs) {
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::size_t classes = sorted.size();
    for (std::size_t p = 0; p < n; ++p)
      color[p] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sigs[p]) -
          sorted.begin());
    return classes;
  };

  std::vector<Sig> sigs(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::int64_t up = 0, down = 0;
    for (std::size_t q = 0; q < n; ++q) {
      up += t.leq[p][q];
      down += t.leq[q][p];
    }
    std::int64_t tau_kind = t.tau[p].is_neg_inf() ? -2
                            : t.tau[p].is_pos_inf() ? 2
                                                    : 0;
    sigs[p] = {tau_kind, t.tau[p].is_finite() ? t.tau[p].value() : 0, up,
               down};
  }
  std::size_t classes = assign(sigs);

  for (;;) {
    for (std::size_t p = 0; p < n; ++p) {
      Sig s;
      s.push_back(static_cast<std::int64_t>(color[p]));
      std::vector<std::int64_t> neigh;
      for (std::size_t q = 0; q < n; ++q) {
        if (q == p) continue;
        neigh.push_back(static_cast<std::int64_t>(color[q]) * 4 +
                        2 * t.leq[p][q] + t.leq[q][p]);
      }
      std::sort(neigh.begin(), neigh.end());
      s.insert(s.end(), neigh.begin(), neigh.end());
      sigs[p] = std::move(s);
    }
    std::size_t next = assign(sigs);
    if (next == classes) break;
    classes = next;
  }

  std::vector<std::vector<std::size_t>> cells(classes);
  for (std::size_t p = 0; p < n; ++p) cells[color[p]].push_back(p);
  return cells;
}

std::string encode(const TemperedPrimSpace& t,
                   const std::vector<std::size_t>& order) {
  std::string s = "tps/" + std::to_string(t.size()) + ";";
  for (std::size_t p : order) s += t.tau[p].str() + ",";
  s += ";";
  for (std::size_t a : order) {
    for (std::size_t b : order) s += t.leq[a][b] ? '1' : '0';
    s += '|';
  }
  return s;
}

void min_encoding_rec(const TemperedPrimSpace& t,
                      std::vector<std::vector<std::size_t>>& cells,
                      std::size_t cell_idx, std::vector<std::size_t>& order,
                      std::string& best) {
  if (cell_idx == cells.size()) {
    std::string enc = encode(t, order);
    if (best.empty() || enc < best) best = std::move(enc);
    return;
  }
  auto& cell = cells[cell_idx];
  std::sort(cell.begin(), cell.end());
  // residual symmetry only lives inside cells; enumerate exactly
  do {
    order.insert(order.end(), cell.begin(), cell.end());
    min_encoding_rec(t, cells, cell_idx + 1, order, best);
    order.resize(order.size() - cell.size());
  } while (std::next_permutation(cell.begin(), cell.end()));
}

}  // namespace

std::string canonical_form(const TemperedPrimSpace& t) {
  auto cells = refine_cells(t);
  std::vector<std::size_t> order;
  order.reserve(t.size());
  std::string best;
  min_encoding_rec(t, cells, 0, order, best);
  return best;
}

namespace {

bool witness_ok(const TemperedPrimSpace& t1, const TemperedPrimSpace& t2,
                const PointWitness& w) {
  const std::size_t n = t1.size();
  if (t2.size() != n || w.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    if (w[p] >= n || hit[w[p]]) return false;
    hit[w[p]] = 1;
    if (!(t1.tau[p] == t2.tau[w[p]])) return false;
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (t1.leq[p][q] != t2.leq[w[p]][w[q]]) return false;
  return true;
}

bool iso_rec(const TemperedPrimSpace& t1, const TemperedPrimSpace& t2,
             std::size_t p, PointWitness& w, std::vector<char>& used) {
  const std::size_t n = t1.size();
  if (p == n) return true;
  for (std::size_t q = 0; q < n; ++q) {
    if (used[q] || !(t1.tau[p] == t2.tau[q])) continue;
    bool ok = true;
    for (std::size_t r = 0; r < p && ok; ++r)
      ok = t1.leq[p][r] == t2.leq[q][w[r]] && t1.leq[r][p] == t2.leq[w[r]][q];
    if (!ok) continue;
    w[p] = q;
    used[q] = 1;
    if (iso_rec(t1, t2, p + 1, w, used)) return true;
    used[q] = 0;
  }
  return false;
}

}  // namespace

std::optional<PointWitness> iso_tps(const TemperedPrimSpace& t1,
                                    const TemperedPrimSpace& t2) {
  if (t1.size() != t2.size()) return std::nullopt;
  PointWitness w(t1.size());
  std::vector<char> used(t1.size(), 0);
  if (!iso_rec(t1, t2, 0, w, used)) return std::nullopt;
  if (!witness_ok(t1, t2, w)) return std::nullopt;  // never expected
  return w;
}

std::optional<std::vector<VertexId>> iso_amplified(const Graph& g1,
                                                   const Graph& g2) {
  auto t1 = tempered_prim(g1);
  auto t2 = tempered_prim(g2);
  auto w = iso_tps(t1, t2);
  if (!w) return std::nullopt;

  // tau matching forces equal component sizes; fill in any bijection on
  // matched components, here by vertex order.
  const auto& c1 = *t1.origin;
  const auto& c2 = *t2.origin;
  std::vector<VertexId> psi(g1.size());
  for (std::size_t p = 0; p < c1.size(); ++p) {
    const auto& a = c1[p];
    const auto& b = c2[(*w)[p]];
    for (std::size_t i = 0; i < a.size(); ++i) psi[a[i]] = b[i];
  }

  // Validate as a graph isomorphism of the amplified closures.
  Graph h1 = amplified_closure(g1);
  Graph h2 = amplified_closure(g2);
  for (VertexId i = 0; i < h1.size(); ++i)
    for (VertexId j = 0; j < h1.size(); ++j)
      if (h1.mult(i, j) != h2.mult(psi[i], psi[j])) return std::nullopt;
  return psi;
}

}  // namespace agc
