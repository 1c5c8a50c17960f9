#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tbi/diffusion.hpp"
#include "tbi/network.hpp"

namespace tbi {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

struct Token {
  std::string_view text;
  int column = 1;  // 1-based
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

// Splits text into non-empty lines of whitespace-separated tokens, dropping
// '#' comments.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

template <typename Int>
Int to_int(const Line& line, const Token& tok) {
  Int value{};
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    throw ParseError(line.number, tok.column,
                     "expected an integer, got '" + std::string(tok.text) + "'");
  return value;
}

inline void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    const auto& last = line.tokens.back();
    throw ParseError(line.number, last.column,
                     "'" + std::string(line.tokens.front().text) + "' expects " +
                         std::to_string(count - 1) + " value(s), got " +
                         std::to_string(line.tokens.size() - 1));
  }
}

inline void expect_header(const std::vector<Line>& lines, std::string_view magic) {
  auto want = std::string(magic);
  if (lines.empty()) throw ParseError(1, 1, "empty input, expected '" + want + "'");
  const auto& first = lines.front();
  std::string got;
  for (const auto& t : first.tokens) {
    if (!got.empty()) got += ' ';
    got += t.text;
  }
  if (got != want)
    throw ParseError(first.number, 1, "expected header '" + want + "', got '" + got + "'");
}

}  // namespace detail

// Parses and validates an instance file.
inline Network parse_instance(std::string_view text) {
  using namespace detail;
  const auto lines = tokenize(text);
  expect_header(lines, "tbi v1");

  std::optional<int> nodes, lambda;
  std::optional<Kind> kind;
  std::optional<std::vector<int>> thresholds;
  std::optional<std::vector<Edge>> edges;
  std::map<std::string_view, int> seen_at;

  std::size_t li = 1;
  while (li < lines.size()) {
    const Line& line = lines[li++];
    const Token& key = line.tokens.front();
    if (auto it = seen_at.find(key.text); it != seen_at.end())
      throw ParseError(line.number, key.column,
                       "duplicate '" + std::string(key.text) + "' (first on line " +
                           std::to_string(it->second) + ")");
    seen_at[key.text] = line.number;

    if (key.text == "nodes") {
      expect_arity(line, 2);
      nodes = to_int<int>(line, line.tokens[1]);
      if (*nodes < 0) throw ParseError(line.number, line.tokens[1].column, "negative node count");
    } else if (key.text == "lambda") {
      expect_arity(line, 2);
      lambda = to_int<int>(line, line.tokens[1]);
      if (*lambda < 0) throw ParseError(line.number, line.tokens[1].column, "negative lambda");
    } else if (key.text == "kind") {
      expect_arity(line, 2);
      Kind k;
      if (!parse_kind(line.tokens[1].text, k))
        throw ParseError(line.number, line.tokens[1].column,
                         "unknown kind '" + std::string(line.tokens[1].text) + "'");
      kind = k;
    } else if (key.text == "thresholds") {
      std::vector<int> t;
      for (std::size_t i = 1; i < line.tokens.size(); ++i)
        t.push_back(to_int<int>(line, line.tokens[i]));
      thresholds = std::move(t);
    } else if (key.text == "edges") {
      expect_arity(line, 2);
      const auto m = to_int<std::int64_t>(line, line.tokens[1]);
      if (m < 0) throw ParseError(line.number, line.tokens[1].column, "negative edge count");
      std::vector<Edge> es;
      for (std::int64_t e = 0; e < m; ++e) {
        if (li >= lines.size())
          throw ParseError(line.number, 1,
                           "edges section declares " + std::to_string(m) + " edges, found " +
                               std::to_string(e));
        const Line& el = lines[li++];
        expect_arity(el, 2);
        const int u = to_int<int>(el, el.tokens[0]);
        const int v = to_int<int>(el, el.tokens[1]);
        if (!(0 <= u && u < v))
          throw ParseError(el.number, el.tokens[0].column, "edge endpoints must satisfy 0 <= u < v");
        if (nodes && v >= *nodes)
          throw ParseError(el.number, el.tokens[1].column,
                           "edge endpoint " + std::to_string(v) + " >= n=" + std::to_string(*nodes));
        es.push_back({u, v});
      }
      edges = std::move(es);
    } else {
      throw ParseError(line.number, key.column, "unknown key '" + std::string(key.text) + "'");
    }
  }

  const int last = lines.back().number;
  if (!nodes) throw ParseError(last, 1, "missing 'nodes'");
  if (!lambda) throw ParseError(last, 1, "missing 'lambda'");
  if (!kind) throw ParseError(last, 1, "missing 'kind'");
  if (!thresholds) throw ParseError(last, 1, "missing 'thresholds'");
  if (static_cast<int>(thresholds->size()) != *nodes)
    throw ParseError(seen_at["thresholds"], 1,
                     "expected " + std::to_string(*nodes) + " thresholds, got " +
                         std::to_string(thresholds->size()));
  for (const Edge& e : edges.value_or(std::vector<Edge>{}))
    if (e.v >= *nodes)
      throw ParseError(seen_at["edges"], 1, "edge endpoint " + std::to_string(e.v) + " >= n");

  Network net;
  switch (*kind) {
    case Kind::path:
    case Kind::clique:
      if (edges)
        throw ParseError(seen_at["edges"], 1,
                         "edges section forbidden for kind " + std::string(to_string(*kind)));
      net = *kind == Kind::path ? Network::path(std::move(*thresholds), *lambda)
                                : Network::clique(std::move(*thresholds), *lambda);
      break;
    case Kind::tree:
    case Kind::general:
      if (!edges) throw ParseError(last, 1, "edges section required for kind " + std::string(to_string(*kind)));
      net = Network::from_edges(*nodes, *edges, std::move(*thresholds), *lambda, *kind);
      break;
  }
  require_valid(net);
  return net;
}

inline std::string write_instance(const Network& net) {
  std::ostringstream os;
  os << "tbi v1\n";
  os << "nodes " << net.size() << "\n";
  os << "lambda " << net.lambda() << "\n";
  os << "kind " << to_string(net.kind()) << "\n";
  os << "thresholds";
  for (int t : net.thresholds()) os << ' ' << t;
  os << "\n";
  if (net.kind() == Kind::tree || net.kind() == Kind::general) {
    const auto edges = net.canonical_edges();
    os << "edges " << edges.size() << "\n";
    for (const Edge& e : edges) os << e.u << ' ' << e.v << "\n";
  }
  return os.str();
}

struct SolutionFile {
  std::int64_t cost = 0;
  std::vector<int> incentives;
  std::vector<int> rounds;
  friend bool operator==(const SolutionFile&, const SolutionFile&) = default;
};

inline SolutionFile to_solution_file(const SolveResult& r) {
  return {r.cost, r.assignment.values, r.activation_round};
}

inline std::string write_solution(const SolutionFile& s) {
  std::ostringstream os;
  os << "tbi-solution v1\n";
  os << "cost " << s.cost << "\n";
  os << "incentives";
  for (int p : s.incentives) os << ' ' << p;
  os << "\nrounds";
  for (int r : s.rounds) os << ' ' << r;
  os << "\n";
  return os.str();
}

inline SolutionFile parse_solution(std::string_view text) {
  using namespace detail;
  const auto lines = tokenize(text);
  expect_header(lines, "tbi-solution v1");
  SolutionFile s;
  bool have_cost = false, have_p = false, have_r = false;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const Token& key = line.tokens.front();
    auto values = [&] {
      std::vector<int> out;
      for (std::size_t i = 1; i < line.tokens.size(); ++i)
        out.push_back(to_int<int>(line, line.tokens[i]));
      return out;
    };
    if (key.text == "cost" && !have_cost) {
      expect_arity(line, 2);
      s.cost = to_int<std::int64_t>(line, line.tokens[1]);
      have_cost = true;
    } else if (key.text == "incentives" && !have_p) {
      s.incentives = values();
      have_p = true;
    } else if (key.text == "rounds" && !have_r) {
      s.rounds = values();
      have_r = true;
    } else {
      throw ParseError(line.number, key.column,
                       "unexpected '" + std::string(key.text) + "'");
    }
  }
  const int last = lines.back().number;
  if (!have_cost) throw ParseError(last, 1, "missing 'cost'");
  if (!have_p) throw ParseError(last, 1, "missing 'incentives'");
  if (!have_r) throw ParseError(last, 1, "missing 'rounds'");
  if (s.incentives.size() != s.rounds.size())
    throw ParseError(last, 1, "incentives and rounds differ in length");
  return s;
}

namespace detail {

// Nodes of a path graph listed from one end to the other (starting at the
// smaller-id endpoint), or empty if the network is not a path.
inline std::vector<NodeId> path_order(const Network& net) {
  const int n = net.size();
  if (n < 2) return {};
  if (net.implicit_clique()) return n == 2 ? std::vector<NodeId>{0, 1} : std::vector<NodeId>{};
  if (!is_tree(net) || !is_simple(net)) return {};
  NodeId start = -1;
  for (NodeId v = 0; v < n; ++v) {
    if (net.degree(v) > 2) return {};
    if (net.degree(v) == 1 && start < 0) start = v;
  }
  std::vector<NodeId> order{start};
  NodeId prev = -1, cur = start;
  while (static_cast<int>(order.size()) < n) {
    NodeId next = -1;
    for (NodeId u : net.neighbors(cur))
      if (u != prev) next = u;
    if (next < 0) return {};
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace detail

// Most specialized class the structure belongs to: path, then clique, then
// tree, otherwise general. Ignores the kind hint.
inline Kind detect_shape(const Network& net) {
  if (!detail::path_order(net).empty()) return Kind::path;
  if (net.size() >= 2 && detail::is_complete(net)) return Kind::clique;
  if (detail::is_simple(net) && detail::is_tree(net)) return Kind::tree;
  return Kind::general;
}

}  // namespace tbi
