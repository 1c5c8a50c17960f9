#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tbi/diffusion.hpp"
#include "tbi/network.hpp"
#include "tbi/tree_solver.hpp"

namespace tbi {

// Thresholds along the path 0-1-...-(n-1). Endpoints have threshold 1 and
// interior nodes threshold 1 or 2.
struct PathInstance {
  std::vector<int> thresholds;
  int lambda = 0;

  int size() const { return static_cast<int>(thresholds.size()); }
  Network to_network() const { return Network::path(thresholds, lambda); }

  friend bool operator==(const PathInstance&, const PathInstance&) = default;
};

inline ValidationReport validate_path(const PathInstance& path) {
  ValidationReport r;
  const int n = path.size();
  if (n < 2) {
    r.violations.push_back("n >= 2 required");
    return r;
  }
  if (path.lambda < 0) r.violations.push_back("lambda must be >= 0");
  for (int i = 0; i < n; ++i) {
    const int t = path.thresholds[i];
    const int cap = (i == 0 || i == n - 1) ? 1 : 2;
    if (t < 1 || t > cap)
      r.violations.push_back("t(" + std::to_string(i) + ")=" + std::to_string(t) +
                             " outside [1," + std::to_string(cap) + "]");
  }
  return r;
}

// Subpath j..k whose interior nodes all have threshold 2 and whose endpoints
// have threshold 1.
struct TwoPathSegment {
  int j = 0;
  int k = 0;
  int middle_length() const { return k - j - 1; }
  friend bool operator==(const TwoPathSegment&, const TwoPathSegment&) = default;
};

inline std::optional<TwoPathSegment> find_leftmost_two_path(
    const PathInstance& path, int start) {
  const int n = path.size();
  int q = start + 1;
  while (q < n - 1 && path.thresholds[q] != 2) ++q;
  if (q >= n - 1) return std::nullopt;
  int k = q + 1;
  while (path.thresholds[k] == 2) ++k;
  return TwoPathSegment{q - 1, k};
}

struct OnesSegmentPlan {
  IncentiveAssignment assignment;
  std::int64_t cost = 0;
};

// Optimal incentives for n consecutive threshold-1 nodes: one incentive per
// block of 2*lambda+1 nodes.
inline OnesSegmentPlan ones_segment_assignment(int n, int lambda) {
  if (n < 1 || lambda < 1)
    throw std::invalid_argument("ones segment needs n >= 1 and lambda >= 1");
  OnesSegmentPlan plan;
  plan.assignment = IncentiveAssignment::zeros(n);
  const int block = 2 * lambda + 1;
  if (n <= block) {
    plan.assignment[n / 2] = 1;
  } else {
    const int full_blocks = n / block;
    for (int c = 0; c < full_blocks; ++c) plan.assignment[lambda + c * block] = 1;
    if (n % block != 0) plan.assignment[n - 1 - lambda] = 1;
  }
  plan.cost = assignment_cost(plan.assignment);
  return plan;
}

// Incentives for the m threshold-2 nodes strictly inside a 2-path:
// 0(20)* when m is odd, 01(20)* when m is even. Sums to m-1.
inline std::vector<int> two_path_middle_pattern(int m) {
  if (m < 1) throw std::invalid_argument("2-path middle length must be >= 1");
  if (m == 2)
    throw std::invalid_argument("length-2 2-paths use classify_length2");
  std::vector<int> seq;
  seq.reserve(m);
  seq.push_back(0);
  if (m % 2 == 0) seq.push_back(1);
  while (static_cast<int>(seq.size()) < m) {
    seq.push_back(2);
    seq.push_back(0);
  }
  return seq;
}

enum class Length2Case { case1, case2 };

struct Length2Choice {
  Length2Case which = Length2Case::case2;
  int first = 1;   // p(j+1)
  int second = 0;  // p(j+2)
  friend bool operator==(const Length2Choice&, const Length2Choice&) = default;
};

// Two threshold-2 nodes j+1, j+2 with threshold-1 nodes i..j to their left.
// When the ones block i..j+1 tiles exactly into (2*lambda+1)-blocks, the
// right node takes the incentive (case 1); otherwise the left one does.
inline Length2Choice classify_length2(int j, int segment_start, int lambda) {
  const int span = j - segment_start + 2;
  const int block = 2 * lambda + 1;
  if (span > 0 && span % block == 0) return {Length2Case::case1, 0, 1};
  return {Length2Case::case2, 1, 0};
}

enum class Side { left, right };

// Appends `count` threshold-1 nodes on one side. Solving the augmented path
// realizes the boundary-constrained subproblems ("the boundary node is
// influenced `count` rounds early") as plain instances.
inline PathInstance augment_with_dummy_nodes(const PathInstance& path, Side side,
                                             int count) {
  if (count < 1 || (path.lambda >= 1 && count > path.lambda))
    throw std::invalid_argument("dummy count must lie in [1, lambda]");
  PathInstance out = path;
  if (side == Side::right) {
    out.thresholds.insert(out.thresholds.end(), count, 1);
  } else {
    out.thresholds.insert(out.thresholds.begin(), count, 1);
  }
  return out;
}

namespace detail {

// Places the ones-lemma incentives on real nodes first..last, padded by
// virtual dummy nodes; an incentive landing on a dummy moves to the nearest
// real node.
inline void place_ones(IncentiveAssignment& p, int first, int last,
                       int left_dummies, int right_dummies, int lambda) {
  if (first > last) throw std::logic_error("empty ones segment");
  const int len = left_dummies + (last - first + 1) + right_dummies;
  const auto plan = ones_segment_assignment(len, lambda);
  for (int pos = 0; pos < len; ++pos) {
    if (plan.assignment[pos] == 0) continue;
    const int node = std::clamp(first - left_dummies + pos, first, last);
    if (p[node] != 0) throw std::logic_error("ones segment incentive collision");
    p[node] = 1;
  }
}

}  // namespace detail

inline SolveResult solve_path(const PathInstance& path) {
  auto report = validate_path(path);
  if (!report.ok()) throw ValidationError(std::move(report));

  const Network net = path.to_network();
  if (path.lambda <= 1) return solve_tree(net);

  const int n = path.size();
  const int lambda = path.lambda;
  PathInstance work = path;
  auto p = IncentiveAssignment::zeros(n);

  int i = 0;
  int left_dummies = 0;
  while (auto seg = find_leftmost_two_path(work, i)) {
    const int j = seg->j;
    const int k = seg->k;
    const int m = seg->middle_length();
    if (m != 2) {
      const auto pattern = two_path_middle_pattern(m);
      for (int r = 0; r < m; ++r) p[j + 1 + r] = pattern[r];
      work.thresholds[j + 1] = work.thresholds[k - 1] = 1;
      detail::place_ones(p, i + left_dummies, j, left_dummies, 1, lambda);
      i = k - 1;
      left_dummies = 1;
    } else {
      const auto choice = classify_length2(j, i, lambda);
      p[j + 1] = choice.first;
      p[j + 2] = choice.second;
      work.thresholds[j + 1] = work.thresholds[j + 2] = 1;
      if (choice.which == Length2Case::case1) {
        detail::place_ones(p, i + left_dummies, j, left_dummies, 1, lambda);
        i = j + 1;
        left_dummies = 2;
      } else {
        detail::place_ones(p, i + left_dummies, j, left_dummies, 2, lambda);
        i = j + 2;
        left_dummies = 1;
      }
    }
  }
  detail::place_ones(p, i + left_dummies, n - 1, left_dummies, 0, lambda);
  return make_result(net, std::move(p), SolverTag::path);
}

inline PathInstance path_instance_from(const Network& net) {
  if (!net.implicit_clique() && !detail::is_path_in_order(net))
    throw ValidationError("network is not the path 0-1-...-(n-1)");
  if (net.implicit_clique() && net.size() != 2)
    throw ValidationError("network is not a path");
  return PathInstance{{net.thresholds().begin(), net.thresholds().end()},
                      net.lambda()};
}

inline SolveResult solve_path(const Network& net) {
  return solve_path(path_instance_from(net));
}

}  // namespace tbi
