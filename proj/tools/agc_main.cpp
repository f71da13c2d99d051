#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "agc/errors.hpp"
#include "agc/graph.hpp"
#include "agc/ideal_lattice.hpp"
#include "agc/invariant.hpp"
#include "agc/io.hpp"
#include "agc/moves.hpp"
#include "agc/oracle.hpp"
#include "agc/realize.hpp"

namespace {

using namespace agc;

std::string join_names(const std::vector<std::string>& all,
                       const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += all[idx[i]];
  }
  return out + "}";
}

int cmd_invariant(const std::string& path, bool with_sigma) {
  Graph g = load_graph(path);
  TemperedPrimSpace t = tempered_prim(g);
  std::cout << serialize_tps(t);
  if (!with_sigma) return 0;
  for (const auto& y : convex_sets(t)) {
    // present Y as U \ V with U the up-closure of Y
    PointSet u_open, v_open;
    for (std::size_t p = 0; p < t.size(); ++p) {
      bool above_y = false;
      for (std::size_t q : y) above_y = above_y || t.leq[q][p];
      if (above_y) u_open.push_back(p);
    }
    for (std::size_t p : u_open)
      if (std::find(y.begin(), y.end(), p) == y.end()) v_open.push_back(p);
    try {
      std::cout << "sigma: " << join_names(t.labels, y) << " "
                << sigma(g, u_open, v_open) << "\n";
    } catch (const Error& e) {
      if (e.code() != Errc::UnsupportedGraphClass) throw;
      std::cout << "sigma: unsupported\n";
      break;
    }
  }
  return 0;
}

int cmd_iso(const std::string& path1, const std::string& path2) {
  Graph g1 = load_graph(path1), g2 = load_graph(path2);
  auto witness = iso_amplified(g1, g2);
  if (!witness) {
    std::cout << "iso: no\n";
    return 1;
  }
  for (VertexId v = 0; v < g1.size(); ++v)
    std::cout << "map " << g1.name(v) << " -> " << g2.name((*witness)[v])
              << "\n";
  return 0;
}

int cmd_ideals(const std::string& path) {
  Graph g = load_graph(path);
  for (const auto& pair : admissible_pairs(g))
    std::cout << "pair: H=" << join_names(g.names(), pair.h)
              << " B=" << join_names(g.names(), pair.b) << "\n";
  std::cout << "all: " << count_ideals(g, IdealCountConvention::All) << "\n";
  std::cout << "proper: "
            << count_ideals(g, IdealCountConvention::ProperNontrivial)
            << "\n";
  return 0;
}

int cmd_check(const std::string& path) {
  Graph g = load_graph(path);
  auto yesno = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "amplified: " << yesno(is_amplified(g)) << "\n";
  std::cout << "singular: " << yesno(is_singular(g)) << "\n";
  std::cout << "condition-K: " << yesno(condition_k(g)) << "\n";
  for (const auto& h : hereditary_sets(g)) {
    if (!is_saturated(g, h)) continue;
    std::cout << "breaking: H=" << join_names(g.names(), h)
              << " B=" << join_names(g.names(), breaking_vertices(g, h))
              << "\n";
  }
  try {
    normalize_singular(g);
  } catch (const Error& e) {
    std::cout << "normalize: no (" << e.what() << ")\n";
    return 1;
  }
  std::cout << "normalize: yes\n";
  return 0;
}

int cmd_apply(const std::string& graph_path, const std::string& moves_path) {
  Graph g = load_graph(graph_path);
  std::ifstream in(moves_path);
  if (!in)
    throw Error(Errc::ParseError, "cannot open '" + moves_path + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      g = apply_move(g, MoveRecord::parse(line));
    } catch (const Error& e) {
      std::cerr << "error: " << moves_path << " line " << lineno << ": "
                << e.what() << "\n";
      return 2;
    }
  }
  std::cout << serialize_graph(g);
  return 0;
}

int cmd_verify(std::size_t max_n, const std::string& fuzz_arg) {
  bool ok = true;
  SweepReport main_rep = verify_main_theorem(max_n);
  std::cout << main_rep.str();
  ok = ok && main_rep.verified();
  if (!fuzz_arg.empty()) {
    auto comma = fuzz_arg.find(',');
    if (comma == std::string::npos)
      throw Error(Errc::ParseError, "--fuzz wants seed,iterations");
    std::uint64_t seed = std::stoull(fuzz_arg.substr(0, comma));
    std::uint64_t iters = std::stoull(fuzz_arg.substr(comma + 1));
    SweepReport fuzz_rep = fuzz_moves(seed, iters, 5);
    std::cout << fuzz_rep.str();
    ok = ok && fuzz_rep.verified();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amplified graph algebra calculator"};
  app.require_subcommand(1);

  std::string in1, in2;
  bool with_sigma = false;
  std::string convention = "proper";
  std::size_t max_n = 3;
  std::string fuzz_arg;

  auto* amplify_cmd = app.add_subcommand("amplify", "amplify a graph");
  amplify_cmd->add_option("graph", in1)->required();

  auto* tclose_cmd = app.add_subcommand("tclose", "transitive closure");
  tclose_cmd->add_option("graph", in1)->required();

  auto* inv_cmd =
      app.add_subcommand("invariant", "tempered primitive ideal space");
  inv_cmd->add_option("graph", in1)->required();
  inv_cmd->add_flag("--sigma", with_sigma,
                    "append unitality diagnostics per convex point set");

  auto* iso_cmd = app.add_subcommand(
      "iso", "decide isomorphism of the amplified graph algebras");
  iso_cmd->add_option("graph1", in1)->required();
  iso_cmd->add_option("graph2", in2)->required();

  auto* ideals_cmd =
      app.add_subcommand("ideals", "gauge-invariant ideal lattice");
  ideals_cmd->add_option("graph", in1)->required();
  ideals_cmd
      ->add_option("--convention", convention, "counting convention")
      ->check(CLI::IsMember({"all", "proper"}));

  auto* check_cmd = app.add_subcommand("check", "classify the input graph");
  check_cmd->add_option("graph", in1)->required();

  auto* realize_cmd =
      app.add_subcommand("realize", "graph with a prescribed invariant");
  realize_cmd->add_option("invariant", in1)->required();

  auto* apply_cmd = app.add_subcommand("apply", "replay move records");
  apply_cmd->add_option("graph", in1)->required();
  apply_cmd->add_option("moves", in2)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run verification sweeps");
  verify_cmd->add_option("--max-n", max_n, "exhaustive sweep bound");
  verify_cmd->add_option("--fuzz", fuzz_arg, "seed,iterations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (amplify_cmd->parsed()) {
      std::cout << agc::serialize_graph(agc::amplify(agc::load_graph(in1)));
      return 0;
    }
    if (tclose_cmd->parsed()) {
      std::cout << agc::serialize_graph(agc::tclose(agc::load_graph(in1)));
      return 0;
    }
    if (inv_cmd->parsed()) return cmd_invariant(in1, with_sigma);
    if (iso_cmd->parsed()) return cmd_iso(in1, in2);
    if (ideals_cmd->parsed()) return cmd_ideals(in1);
    if (check_cmd->parsed()) return cmd_check(in1);
    if (realize_cmd->parsed()) {
      std::cout << agc::serialize_graph(agc::realize(agc::load_tps(in1)));
      return 0;
    }
    if (apply_cmd->parsed()) return cmd_apply(in1, in2);
    if (verify_cmd->parsed()) return cmd_verify(max_n, fuzz_arg);
  } catch (const agc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
