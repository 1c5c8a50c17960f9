#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tbi {

using NodeId = int;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Kind { path, clique, tree, general };

inline std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::path: return "path";
    case Kind::clique: return "clique";
    case Kind::tree: return "tree";
    case Kind::general: return "general";
  }
  return "general";
}

inline bool parse_kind(std::string_view s, Kind& out) {
  for (Kind k : {Kind::path, Kind::clique, Kind::tree, Kind::general}) {
    if (s == to_string(k)) {
      out = k;
      return true;
    }
  }
  return false;
}

// Result of validate_instance: one human-readable line per violated rule.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string str() const {
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v;
    }
    return s;
  }
};

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(ValidationReport report)
      : std::invalid_argument("invalid instance: " + report.str()),
        report_(std::move(report)) {}
  explicit ValidationError(const std::string& what)
      : std::invalid_argument("invalid instance: " + what),
        report_{{what}} {}

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Undirected graph with per-node thresholds and a round budget.
//
// Complete graphs are stored implicitly so that cliques with 10^5 nodes
// stay linear in memory; every other kind keeps a CSR adjacency. The
// object is immutable after construction.
class Network {
 public:
  Network() = default;

  // Path 0-1-...-(n-1).
  static Network path(std::vector<int> thresholds, int lambda) {
    const int n = static_cast<int>(thresholds.size());
    std::vector<Edge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Network(n, edges, std::move(thresholds), lambda, Kind::path);
  }

  static Network clique(std::vector<int> thresholds, int lambda) {
    Network net;
    net.n_ = static_cast<int>(thresholds.size());
    net.thresholds_ = std::move(thresholds);
    net.lambda_ = lambda;
    net.kind_ = Kind::clique;
    net.implicit_clique_ = true;
    return net;
  }

  static Network from_edges(int n, std::span<const Edge> edges,
                            std::vector<int> thresholds, int lambda,
                            Kind kind = Kind::general) {
    return Network(n, edges, std::move(thresholds), lambda, kind);
  }

  int size() const { return n_; }
  int lambda() const { return lambda_; }
  Kind kind() const { return kind_; }
  bool implicit_clique() const { return implicit_clique_; }

  std::span<const int> thresholds() const { return thresholds_; }
  int threshold(NodeId v) const { return thresholds_[v]; }

  int degree(NodeId v) const {
    if (implicit_clique_) return n_ - 1;
    return offsets_[v + 1] - offsets_[v];
  }

  int max_degree() const {
    int d = 0;
    for (NodeId v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  // Adjacency of v; unavailable for implicit cliques (use for_each_neighbor).
  std::span<const NodeId> neighbors(NodeId v) const {
    if (implicit_clique_)
      throw std::logic_error("neighbors() on an implicit clique");
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  template <typename F>
  void for_each_neighbor(NodeId v, F&& f) const {
    if (implicit_clique_) {
      for (NodeId u = 0; u < n_; ++u)
        if (u != v) f(u);
      return;
    }
    for (NodeId u : neighbors(v)) f(u);
  }

  // Edges as given at construction (implicit for cliques), u < v not enforced
  // for raw input; see canonical_edges().
  std::span<const Edge> raw_edges() const { return raw_edges_; }

  // Sorted, u < v, duplicates and self loops removed.
  std::vector<Edge> canonical_edges() const {
    std::vector<Edge> out;
    if (implicit_clique_) {
      for (NodeId u = 0; u < n_; ++u)
        for (NodeId v = u + 1; v < n_; ++v) out.push_back({u, v});
      return out;
    }
    for (Edge e : raw_edges_) {
      if (e.u == e.v) continue;
      if (e.u > e.v) std::swap(e.u, e.v);
      out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::int64_t edge_count() const {
    if (implicit_clique_) return std::int64_t{n_} * (n_ - 1) / 2;
    return static_cast<std::int64_t>(raw_edges_.size());
  }

  std::int64_t threshold_sum() const {
    return std::accumulate(thresholds_.begin(), thresholds_.end(),
                           std::int64_t{0});
  }

  Network with_lambda(int lambda) const {
    Network copy = *this;
    copy.lambda_ = lambda;
    return copy;
  }

  Network with_thresholds(std::vector<int> thresholds) const {
    Network copy = *this;
    copy.thresholds_ = std::move(thresholds);
    return copy;
  }

  Network with_kind(Kind kind) const {
    Network copy = *this;
    copy.kind_ = kind;
    return copy;
  }

  // Explicit adjacency for a network, materializing cliques if needed.
  Network explicit_copy() const {
    if (!implicit_clique_) return *this;
    auto edges = canonical_edges();
    return Network(n_, edges, thresholds_, lambda_, kind_);
  }

  friend bool operator==(const Network& a, const Network& b) {
    return a.n_ == b.n_ && a.lambda_ == b.lambda_ && a.kind_ == b.kind_ &&
           a.thresholds_ == b.thresholds_ &&
           a.canonical_edges() == b.canonical_edges();
  }

 private:
  Network(int n, std::span<const Edge> edges, std::vector<int> thresholds,
          int lambda, Kind kind)
      : n_(n),
        lambda_(lambda),
        kind_(kind),
        thresholds_(std::move(thresholds)),
        raw_edges_(edges.begin(), edges.end()) {
    const int nn = std::max(n, 0);
    offsets_.assign(nn + 1, 0);
    for (const Edge& e : raw_edges_) {
      if (!in_range(e)) continue;
      ++offsets_[e.u + 1];
      if (e.u != e.v) ++offsets_[e.v + 1];
    }
    for (int v = 0; v < nn; ++v) offsets_[v + 1] += offsets_[v];
    targets_.resize(offsets_[nn]);
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : raw_edges_) {
      if (!in_range(e)) continue;
      targets_[fill[e.u]++] = e.v;
      if (e.u != e.v) targets_[fill[e.v]++] = e.u;
    }
    for (int v = 0; v < nn; ++v)
      std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
  }

  bool in_range(const Edge& e) const {
    return e.u >= 0 && e.v >= 0 && e.u < n_ && e.v < n_;
  }

  int n_ = 0;
  int lambda_ = 0;
  Kind kind_ = Kind::general;
  bool implicit_clique_ = false;
  std::vector<int> thresholds_;
  std::vector<Edge> raw_edges_;
  std::vector<int> offsets_{0};
  std::vector<NodeId> targets_;
};

namespace detail {

inline bool is_connected(const Network& net) {
  const int n = net.size();
  if (n == 0) return false;
  if (net.implicit_clique()) return true;
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : net.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

inline bool is_simple(const Network& net) {
  if (net.implicit_clique()) return true;
  for (const Edge& e : net.raw_edges())
    if (e.u == e.v) return false;
  return net.canonical_edges().size() == net.raw_edges().size();
}

inline bool is_path_in_order(const Network& net) {
  const int n = net.size();
  if (net.implicit_clique()) return n == 2;
  if (static_cast<int>(net.raw_edges().size()) != n - 1) return false;
  auto edges = net.canonical_edges();
  if (static_cast<int>(edges.size()) != n - 1) return false;
  for (int i = 0; i + 1 < n; ++i)
    if (edges[i] != Edge{i, i + 1}) return false;
  return true;
}

inline bool is_complete(const Network& net) {
  if (net.implicit_clique()) return true;
  const std::int64_t n = net.size();
  return is_simple(net) &&
         static_cast<std::int64_t>(net.raw_edges().size()) == n * (n - 1) / 2;
}

inline bool is_tree(const Network& net) {
  return net.edge_count() == net.size() - 1 && is_connected(net);
}

}  // namespace detail

// Reports every violated instance rule; never throws.
inline ValidationReport validate_instance(const Network& net) {
  ValidationReport r;
  const int n = net.size();
  auto add = [&](std::string s) { r.violations.push_back(std::move(s)); };

  if (n < 2) {
    add("n >= 2 required");
    return r;
  }
  if (static_cast<int>(net.thresholds().size()) != n) {
    add("threshold count " + std::to_string(net.thresholds().size()) +
        " != n=" + std::to_string(n));
    return r;
  }
  if (net.lambda() < 0) add("lambda must be >= 0");

  bool structural_ok = true;
  if (!net.implicit_clique()) {
    for (const Edge& e : net.raw_edges()) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
        add("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
            ") out of range");
        structural_ok = false;
      } else if (e.u == e.v) {
        add("self-loop at node " + std::to_string(e.u));
        structural_ok = false;
      }
    }
    if (structural_ok) {
      std::vector<Edge> sorted;
      for (Edge e : net.raw_edges()) {
        if (e.u > e.v) std::swap(e.u, e.v);
        sorted.push_back(e);
      }
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
          add("parallel edge (" + std::to_string(sorted[i].u) + "," +
              std::to_string(sorted[i].v) + ")");
          structural_ok = false;
        }
      }
    }
  }

  for (NodeId v = 0; v < n; ++v) {
    const int t = net.threshold(v);
    const int d = net.degree(v);
    if (t < 1) {
      add("t(" + std::to_string(v) + ")=" + std::to_string(t) + " < 1");
    } else if (t > d) {
      add("t(" + std::to_string(v) + ")=" + std::to_string(t) + " > d(" +
          std::to_string(v) + ")=" + std::to_string(d));
    }
  }

  if (!structural_ok) return r;
  switch (net.kind()) {
    case Kind::path:
      if (!detail::is_path_in_order(net))
        add("kind path requires exactly the edges i-(i+1)");
      break;
    case Kind::clique:
      if (!detail::is_complete(net)) add("kind clique requires all pairs");
      break;
    case Kind::tree:
      if (net.edge_count() != n - 1)
        add("tree must have n-1 edges");
      else if (!detail::is_connected(net))
        add("tree must be connected");
      break;
    case Kind::general:
      break;
  }
  return r;
}

inline void require_valid(const Network& net) {
  auto report = validate_instance(net);
  if (!report.ok()) throw ValidationError(std::move(report));
}

}  // namespace tbi
