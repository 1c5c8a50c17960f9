#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tbi/network.hpp"

namespace tbi {

// Per-node incentive p(v); valid when 0 <= p(v) <= t(v).
struct IncentiveAssignment {
  std::vector<int> values;

  IncentiveAssignment() = default;
  explicit IncentiveAssignment(std::vector<int> v) : values(std::move(v)) {}
  static IncentiveAssignment zeros(int n) {
    return IncentiveAssignment(std::vector<int>(n, 0));
  }

  int size() const { return static_cast<int>(values.size()); }
  int operator[](NodeId v) const { return values[v]; }
  int& operator[](NodeId v) { return values[v]; }

  friend bool operator==(const IncentiveAssignment&,
                         const IncentiveAssignment&) = default;
};

inline std::int64_t assignment_cost(const IncentiveAssignment& p) {
  return std::accumulate(p.values.begin(), p.values.end(), std::int64_t{0});
}

inline constexpr int kNever = -1;

// Influence process from a fixed incentive assignment, run to its fixpoint.
//
// `layers[l]` holds the nodes that become influenced exactly at round l;
// the influenced set after round l is the union of layers[0..l].
struct DiffusionTrace {
  std::vector<std::vector<NodeId>> layers;
  std::vector<int> activation_round;  // kNever if not influenced at fixpoint

  // Last round in which the influenced set grew (0 if nothing ever grew).
  int fixpoint_round() const {
    return layers.empty() ? 0 : static_cast<int>(layers.size()) - 1;
  }

  bool influenced_by(NodeId v, int round) const {
    const int r = activation_round[v];
    return r != kNever && r <= round;
  }

  std::vector<NodeId> influenced_set(int round) const {
    std::vector<NodeId> out;
    for (int l = 0; l <= round && l < static_cast<int>(layers.size()); ++l)
      out.insert(out.end(), layers[l].begin(), layers[l].end());
    std::sort(out.begin(), out.end());
    return out;
  }

  int influenced_count() const {
    int c = 0;
    for (const auto& layer : layers) c += static_cast<int>(layer.size());
    return c;
  }

  // Max activation round, or kNever if some node is never influenced.
  int completion_round() const {
    int worst = 0;
    for (int r : activation_round) {
      if (r == kNever) return kNever;
      worst = std::max(worst, r);
    }
    return worst;
  }
};

inline void check_assignment_bounds(const Network& net,
                                    const IncentiveAssignment& p) {
  if (p.size() != net.size())
    throw std::invalid_argument("incentive vector has " +
                                std::to_string(p.size()) + " entries, expected " +
                                std::to_string(net.size()));
  for (NodeId v = 0; v < net.size(); ++v) {
    if (p[v] < 0 || p[v] > net.threshold(v))
      throw std::invalid_argument("p(" + std::to_string(v) + ")=" +
                                  std::to_string(p[v]) + " outside [0, t(" +
                                  std::to_string(v) + ")=" +
                                  std::to_string(net.threshold(v)) + "]");
  }
}

namespace detail {

// Complete graph: an uninfluenced node sees every influenced node, so round
// l activates all nodes whose residual threshold is at most the number of
// nodes influenced by round l-1.
inline DiffusionTrace simulate_clique(const Network& net,
                                      const IncentiveAssignment& p) {
  const int n = net.size();
  DiffusionTrace trace;
  trace.activation_round.assign(n, kNever);

  std::vector<int> bucket_start(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) ++bucket_start[net.threshold(v) - p[v]];
  int acc = 0;
  for (int r = 0; r <= n; ++r) {
    const int c = bucket_start[r];
    bucket_start[r] = acc;
    acc += c;
  }
  std::vector<NodeId> by_residual(n);
  for (NodeId v = 0; v < n; ++v)
    by_residual[bucket_start[net.threshold(v) - p[v]]++] = v;

  std::size_t next = 0;
  int influenced = 0;
  for (int round = 0;; ++round) {
    std::vector<NodeId> layer;
    while (next < by_residual.size()) {
      const NodeId v = by_residual[next];
      if (net.threshold(v) - p[v] > influenced) break;
      layer.push_back(v);
      trace.activation_round[v] = round;
      ++next;
    }
    if (round > 0 && layer.empty()) break;
    std::sort(layer.begin(), layer.end());
    influenced += static_cast<int>(layer.size());
    trace.layers.push_back(std::move(layer));
    if (influenced == 0) break;
  }
  return trace;
}

inline DiffusionTrace simulate_sparse(const Network& net,
                                      const IncentiveAssignment& p) {
  const int n = net.size();
  DiffusionTrace trace;
  trace.activation_round.assign(n, kNever);
  std::vector<int> heard(n, 0);
  std::vector<int> stamp(n, -1);

  std::vector<NodeId> frontier;
  for (NodeId v = 0; v < n; ++v) {
    if (p[v] == net.threshold(v)) {
      frontier.push_back(v);
      trace.activation_round[v] = 0;
    }
  }
  trace.layers.push_back(frontier);

  for (int round = 1; !frontier.empty(); ++round) {
    std::vector<NodeId> touched;
    for (NodeId u : frontier) {
      for (NodeId w : net.neighbors(u)) {
        if (trace.activation_round[w] != kNever) continue;
        ++heard[w];
        if (stamp[w] != round) {
          stamp[w] = round;
          touched.push_back(w);
        }
      }
    }
    std::vector<NodeId> next;
    for (NodeId w : touched)
      if (heard[w] >= net.threshold(w) - p[w]) next.push_back(w);
    std::sort(next.begin(), next.end());
    for (NodeId w : next) trace.activation_round[w] = round;
    if (next.empty()) break;
    trace.layers.push_back(next);
    frontier = std::move(next);
  }
  return trace;
}

}  // namespace detail

// Runs the threshold-with-incentives process to its fixpoint, independent of
// the network's round budget.
inline DiffusionTrace simulate(const Network& net, const IncentiveAssignment& p) {
  check_assignment_bounds(net, p);
  if (net.implicit_clique()) return detail::simulate_clique(net, p);
  return detail::simulate_sparse(net, p);
}

// True iff every node is influenced by round lambda.
inline bool verify_solution(const Network& net, const IncentiveAssignment& p) {
  const int done = simulate(net, p).completion_round();
  return done != kNever && done <= net.lambda();
}

enum class SolverTag { path, clique, tree, oracle };

inline std::string_view to_string(SolverTag s) {
  switch (s) {
    case SolverTag::path: return "path";
    case SolverTag::clique: return "clique";
    case SolverTag::tree: return "tree";
    case SolverTag::oracle: return "oracle";
  }
  return "oracle";
}

struct SolveResult {
  std::int64_t cost = 0;
  IncentiveAssignment assignment;
  std::vector<int> activation_round;
  SolverTag solver = SolverTag::oracle;
};

// Packages an assignment: cost from the incentives, rounds from simulation.
inline SolveResult make_result(const Network& net, IncentiveAssignment p,
                               SolverTag solver) {
  SolveResult r;
  r.cost = assignment_cost(p);
  r.activation_round = simulate(net, p).activation_round;
  r.assignment = std::move(p);
  r.solver = solver;
  return r;
}

}  // namespace tbi
