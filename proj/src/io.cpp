#include "agc/io.hpp"

#include <fstream>
#include <sstream>

#include "agc/errors.hpp"

namespace agc {

namespace {

// Significant lines: comments stripped, blanks skipped.
std::vector<std::string> significant_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) lines.push_back(line);
  }
  return lines;
}

Multiplicity parse_mult_token(const std::string& tok) {
  if (tok == "*" || tok == "inf") return kOmega;
  std::uint64_t n = 0;
  for (char c : tok) {
    if (c < '0' || c > '9')
      throw Error(Errc::ParseError, "bad multiplicity token '" + tok + "'");
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return Multiplicity(n);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw Error(Errc::ParseError, "empty graph file");

  std::size_t cursor = 0;
  std::istringstream head(lines[cursor++]);
  long long n_signed;
  std::string extra;
  if (!(head >> n_signed) || n_signed < 0 || (head >> extra))
    throw Error(Errc::ParseError, "expected a vertex count");
  auto n = static_cast<std::size_t>(n_signed);

  std::vector<std::string> names;
  if (cursor < lines.size()) {
    std::istringstream probe(lines[cursor]);
    std::string first;
    probe >> first;
    if (first == "names:") {
      std::string name;
      while (probe >> name) names.push_back(name);
      if (names.size() != n)
        throw Error(Errc::ParseError, "names line must list every vertex");
      ++cursor;
    }
  }
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i)
      names.push_back("v" + std::to_string(i + 1));

  std::vector<std::vector<Multiplicity>> m;
  for (std::size_t i = 0; i < n; ++i) {
    if (cursor >= lines.size())
      throw Error(Errc::ParseError, "missing matrix row " +
                                        std::to_string(i + 1));
    std::istringstream row(lines[cursor++]);
    std::vector<Multiplicity> entries;
    std::string tok;
    while (row >> tok) entries.push_back(parse_mult_token(tok));
    if (entries.size() != n)
      throw Error(Errc::ParseError, "matrix row " + std::to_string(i + 1) +
                                        " has " +
                                        std::to_string(entries.size()) +
                                        " entries, expected " +
                                        std::to_string(n));
    m.push_back(std::move(entries));
  }
  if (cursor != lines.size())
    throw Error(Errc::ParseError, "trailing content after the matrix");
  return Graph(std::move(names), std::move(m));
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.size() << "\n";
  if (g.size() > 0) {
    out << "names:";
    for (const auto& name : g.names()) out << " " << name;
    out << "\n";
  }
  for (VertexId i = 0; i < g.size(); ++i) {
    for (VertexId j = 0; j < g.size(); ++j)
      out << (j ? " " : "") << g.mult(i, j).str();
    out << "\n";
  }
  return out.str();
}

TemperedPrimSpace parse_tps(std::istream& in) {
  auto lines = significant_lines(in);
  if (lines.empty()) throw Error(Errc::ParseError, "empty invariant file");

  std::size_t cursor = 0;
  auto expect_key = [&](const std::string& key) -> std::istringstream {
    if (cursor >= lines.size())
      throw Error(Errc::ParseError, "expected '" + key + "' line");
    std::istringstream row(lines[cursor++]);
    std::string first;
    row >> first;
    if (first != key)
      throw Error(Errc::ParseError, "expected '" + key + "', got '" + first +
                                        "'");
    return row;
  };

  auto head = expect_key("points:");
  long long n_signed;
  if (!(head >> n_signed) || n_signed < 0)
    throw Error(Errc::ParseError, "bad point count");
  auto n = static_cast<std::size_t>(n_signed);

  TemperedPrimSpace t;
  for (std::size_t i = 0; i < n; ++i)
    t.labels.push_back("p" + std::to_string(i + 1));

  auto tau_row = expect_key("tau:");
  std::string tok;
  while (tau_row >> tok) {
    if (tok == "+inf" || tok == "inf") {
      t.tau.push_back(Tau::pos_inf());
    } else if (tok == "-inf") {
      t.tau.push_back(Tau::neg_inf());
    } else {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        t.tau.push_back(Tau::finite(v));
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, "bad tau token '" + tok + "'");
      }
    }
  }
  if (t.tau.size() != n)
    throw Error(Errc::ParseError, "tau line must list every point");

  t.leq.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) t.leq[i][i] = 1;
  while (cursor < lines.size()) {
    auto row = expect_key("le:");
    long long a, b;
    std::string extra;
    if (!(row >> a >> b) || (row >> extra) || a < 1 || b < 1 ||
        a > static_cast<long long>(n) || b > static_cast<long long>(n))
      throw Error(Errc::ParseError, "bad 'le:' line");
    t.leq[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] =
        1;
  }
  // reflexive-transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (t.leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (t.leq[k][j]) t.leq[i][j] = 1;
  t.validate();  // rejects non-T0 relations
  return t;
}

TemperedPrimSpace parse_tps_text(const std::string& text) {
  std::istringstream in(text);
  return parse_tps(in);
}

TemperedPrimSpace load_tps(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return parse_tps(in);
}

std::string serialize_tps(const TemperedPrimSpace& t) {
  const std::size_t n = t.size();
  std::ostringstream out;
  out << "points: " << n << "\n";
  out << "tau:";
  for (const auto& tau : t.tau) out << " " << tau.str();
  out << "\n";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !t.leq[a][b]) continue;
      bool covering = true;
      for (std::size_t c = 0; c < n && covering; ++c)
        if (c != a && c != b && t.leq[a][c] && t.leq[c][b]) covering = false;
      if (covering) out << "le: " << a + 1 << " " << b + 1 << "\n";
    }
  return out.str();
}

std::vector<MoveRecord> parse_moves(std::istream& in) {
  std::vector<MoveRecord> recs;
  for (const auto& line : significant_lines(in))
    recs.push_back(MoveRecord::parse(line));
  return recs;
}

std::vector<MoveRecord> load_moves(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return parse_moves(in);
}

std::string serialize_moves(const std::vector<MoveRecord>& recs) {
  std::string out;
  for (const auto& rec : recs) out += rec.str() + "\n";
  return out;
}

}  // namespace agc
