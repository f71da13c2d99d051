#ifndef AGC_TESTS_HELPERS_HPP
#define AGC_TESTS_HELPERS_HPP

#include <string>

#include "agc/graph.hpp"
#include "agc/io.hpp"

inline std::string fixture_path(const std::string& name) {
  return std::string(AGC_FIXTURE_DIR) + "/" + name;
}

inline agc::Graph fixture_graph(const std::string& name) {
  return agc::load_graph(fixture_path(name));
}

// Graph on n vertices with entries in {0, 1, omega}, decoded from the
// base-3 digits of code (row-major, least significant digit first).
inline agc::Graph ternary_graph(std::size_t n, std::uint64_t code) {
  std::vector<std::vector<agc::Multiplicity>> m(
      n, std::vector<agc::Multiplicity>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      switch (code % 3) {
        case 1: m[i][j] = agc::Multiplicity(1); break;
        case 2: m[i][j] = agc::kOmega; break;
        default: break;
      }
      code /= 3;
    }
  return agc::Graph::with_default_names(std::move(m));
}

#endif
