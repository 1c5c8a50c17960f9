#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tbi/diffusion.hpp"
#include "tbi/network.hpp"

namespace tbi {

struct SortedThresholds {
  std::vector<int> sorted;   // non-decreasing
  std::vector<NodeId> perm;  // perm[rank] = original node id
};

// Stable counting sort; thresholds must lie in [1, n-1].
inline SortedThresholds sort_by_threshold(std::span<const int> t) {
  const int n = static_cast<int>(t.size());
  for (int v = 0; v < n; ++v) {
    if (t[v] < 1 || t[v] > n - 1)
      throw ValidationError("t(" + std::to_string(v) + ")=" + std::to_string(t[v]) +
                            " outside [1, " + std::to_string(n - 1) + "]");
  }
  std::vector<int> start(n + 1, 0);
  for (int x : t) ++start[x];
  int acc = 0;
  for (int& s : start) {
    const int c = s;
    s = acc;
    acc += c;
  }
  SortedThresholds out;
  out.sorted.resize(n);
  out.perm.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    const int pos = start[t[v]]++;
    out.sorted[pos] = t[v];
    out.perm[pos] = v;
  }
  return out;
}

// Dynamic-programming tables over the sorted thresholds t_1 <= ... <= t_n
// (1-based ranks). value(m, l) is the cheapest way to influence the first m
// nodes within l rounds; index(m, l) is the number of those nodes influenced
// by round l-1 in the smallest optimal split.
class CliqueTables {
 public:
  explicit CliqueTables(std::span<const int> sorted) : n_(static_cast<int>(sorted.size())) {
    t_.assign(n_ + 1, 0);
    std::copy(sorted.begin(), sorted.end(), t_.begin() + 1);
    prefix_.assign(n_ + 1, 0);
    for (int m = 1; m <= n_; ++m) prefix_[m] = prefix_[m - 1] + t_[m];
    // first_at_least_[x] = smallest rank i with t_i >= x, or n+1.
    first_at_least_.assign(n_ + 2, n_ + 1);
    int i = 1;
    for (int x = 1; x <= n_ + 1; ++x) {
      while (i <= n_ && t_[i] < x) ++i;
      first_at_least_[x] = i;
    }
    value_.push_back(prefix_);
    std::vector<int> idx(n_ + 2, 0);
    idx[0] = 1;
    idx[n_ + 1] = n_;
    index_.push_back(std::move(idx));
  }

  int size() const { return n_; }
  int columns() const { return static_cast<int>(value_.size()); }
  int threshold(int rank) const { return t_[rank]; }

  std::int64_t value(int m, int round) const { return value_[round][m]; }
  int index(int m, int round) const { return index_[round][m]; }
  std::int64_t prefix_sum(int m) const { return prefix_[m]; }
  int first_at_least(int x) const { return first_at_least_[x]; }

  // value(j, l-1) + sum_{i=j+1..m} max(0, t_i - j), in O(1).
  std::int64_t eval_A(int j, int m, int round) const {
    std::int64_t tail = 0;
    const int s = std::max(j + 1, first_at_least_[std::min(j + 1, n_ + 1)]);
    if (s <= m) tail = (prefix_[m] - prefix_[s - 1]) - std::int64_t{j} * (m - s + 1);
    return value_[round - 1][j] + tail;
  }

  // Appends column `columns()` using the midpoint recursion, whose search
  // windows are bounded by the already-computed neighbours' indices.
  void compute_index_column() {
    const int round = columns();
    value_.emplace_back(n_ + 1, 0);
    std::vector<int> idx(n_ + 2, 0);
    idx[0] = 1;
    idx[n_ + 1] = n_;
    index_.push_back(std::move(idx));
    fill(round, 1, n_);
  }

  // True when the last column repeats the previous one; every later column
  // would repeat it too.
  bool stable() const {
    const int c = columns();
    return c >= 2 && value_[c - 1] == value_[c - 2];
  }

 private:
  void fill(int round, int x, int y) {
    if (x > y) return;
    const int m = (x + y + 1) / 2;
    auto& idx = index_[round];
    const int lo = idx[x - 1];
    const int hi = std::min(idx[y + 1], m);
    int best = lo;
    std::int64_t best_value = eval_A(lo, m, round);
    for (int j = lo + 1; j <= hi; ++j) {
      const std::int64_t a = eval_A(j, m, round);
      if (a < best_value) {
        best_value = a;
        best = j;
      }
    }
    idx[m] = best;
    value_[round][m] = best_value;
    fill(round, x, m - 1);
    fill(round, m + 1, y);
  }

  int n_;
  std::vector<int> t_;
  std::vector<std::int64_t> prefix_;
  std::vector<int> first_at_least_;
  std::vector<std::vector<std::int64_t>> value_;  // [round][m]
  std::vector<std::vector<int>> index_;           // [round][m], rows 0 and n+1 dummy
};

struct CliqueSolution {
  SolveResult result;
  SortedThresholds order;
  CliqueTables tables;
  int rounds_used = 0;               // last column filled
  std::vector<int> scheduled_round;  // per sorted rank (0-based), from backtracking
};

inline CliqueSolution solve_clique_detailed(std::span<const int> thresholds, int lambda) {
  if (thresholds.size() < 2) throw ValidationError("n >= 2 required");
  if (lambda < 0) throw ValidationError("lambda must be >= 0");
  auto order = sort_by_threshold(thresholds);
  const int n = static_cast<int>(thresholds.size());
  CliqueTables tables(order.sorted);

  const int limit = std::min(lambda, n);
  while (tables.columns() <= limit) {
    tables.compute_index_column();
    if (tables.stable()) break;
  }
  const int last = tables.columns() - 1;

  std::vector<int> sorted_p(n, 0);
  std::vector<int> scheduled(n, 0);
  int m = n;
  for (int round = last; round > 0 && m > 0; --round) {
    const int j = tables.index(m, round);
    for (int r = j + 1; r <= m; ++r) {
      sorted_p[r - 1] = std::max(0, tables.threshold(r) - j);
      scheduled[r - 1] = round;
    }
    m = j;
  }
  for (int r = 1; r <= m; ++r) {
    sorted_p[r - 1] = tables.threshold(r);
    scheduled[r - 1] = 0;
  }

  auto p = IncentiveAssignment::zeros(n);
  for (int r = 0; r < n; ++r) p[order.perm[r]] = sorted_p[r];

  const Network net = Network::clique({thresholds.begin(), thresholds.end()}, lambda);
  CliqueSolution sol{make_result(net, std::move(p), SolverTag::clique), std::move(order),
                     std::move(tables), last, std::move(scheduled)};
  if (sol.result.cost != sol.tables.value(n, last))
    throw std::logic_error("clique backtracking cost mismatch");
  return sol;
}

inline SolveResult solve_clique(std::span<const int> thresholds, int lambda) {
  return solve_clique_detailed(thresholds, lambda).result;
}

inline SolveResult solve_clique(const Network& net) {
  if (!detail::is_complete(net)) throw ValidationError("network is not a complete graph");
  require_valid(net);
  auto r = solve_clique(net.thresholds(), net.lambda());
  if (!net.implicit_clique())
    r.activation_round = simulate(net, r.assignment).activation_round;
  return r;
}

}  // namespace tbi
