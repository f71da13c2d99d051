#include "agc/realize.hpp"

#include "agc/errors.hpp"

namespace agc {

void check_realizable(const TargetSpec& t) {
  t.validate();
  for (const auto& tau : t.tau)
    if (!tau.is_finite() || (tau.value() <= 0 && tau.value() != -1))
      throw Error(Errc::TauOutOfRange,
                  "realizable tau values are -1 and positive integers, got " +
                      tau.str());
}

Graph hasse(const TargetSpec& t) {
  t.validate();
  const std::size_t n = t.size();
  std::vector<std::vector<Multiplicity>> m(n, std::vector<Multiplicity>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !t.leq[x][y]) continue;
      bool covering = true;
      for (std::size_t z = 0; z < n && covering; ++z)
        if (z != x && z != y && t.leq[x][z] && t.leq[z][y]) covering = false;
      if (covering) m[x][y] = Multiplicity(1);
    }
  return Graph(t.labels, std::move(m));
}

Graph realize(const TargetSpec& t) {
  check_realizable(t);
  const std::size_t n = t.size();
  Graph cover = hasse(t);

  std::vector<std::size_t> block_start(n), block_size(n);
  std::size_t total = 0;
  for (std::size_t p = 0; p < n; ++p) {
    block_start[p] = total;
    block_size[p] = t.tau[p].value() > 0
                        ? static_cast<std::size_t>(t.tau[p].value())
                        : 1;
    total += block_size[p];
  }

  std::vector<std::string> names;
  names.reserve(total);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < block_size[p]; ++i)
      names.push_back(t.labels[p] + "." + std::to_string(i + 1));

  std::vector<std::vector<Multiplicity>> m(total,
                                           std::vector<Multiplicity>(total));
  for (std::size_t p = 0; p < n; ++p) {
    if (t.tau[p].value() > 0) {
      // purely infinite block: all pairs, loops included
      for (std::size_t i = 0; i < block_size[p]; ++i)
        for (std::size_t j = 0; j < block_size[p]; ++j)
          m[block_start[p] + i][block_start[p] + j] = kOmega;
    }
    for (std::size_t q = 0; q < n; ++q)
      if (cover.mult(p, q).is_positive())
        m[block_start[p]][block_start[q]] = kOmega;  // representative wiring
  }
  return Graph(std::move(names), std::move(m));
}

TargetSpec extension_invariant(const TargetSpec& ambient,
                               const PointSet& u_open,
                               const std::map<std::size_t, Tau>& f_ideal,
                               const std::map<std::size_t, Tau>& f_quotient) {
  ambient.validate();
  if (!is_up_set(ambient, u_open))
    throw Error(Errc::NotOpen, "the ideal's support must be an open set");

  TargetSpec out = ambient;
  out.origin.reset();
  std::vector<char> in_u(ambient.size(), 0);
  for (std::size_t p : u_open) in_u[p] = 1;
  for (std::size_t p = 0; p < ambient.size(); ++p) {
    const auto& f = in_u[p] ? f_ideal : f_quotient;
    auto it = f.find(p);
    if (it == f.end())
      throw Error(Errc::TauOutOfRange,
                  "no tau value supplied for point " + ambient.labels[p]);
    out.tau[p] = it->second;
  }
  check_realizable(out);
  return out;
}

}  // namespace agc
