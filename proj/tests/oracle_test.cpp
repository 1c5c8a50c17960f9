#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "tbi/generate.hpp"
#include "tbi/oracle.hpp"
#include "tbi/path_solver.hpp"

namespace tbi {
namespace {

TEST(OracleTest, PathNeedsThreeWithinTwoRounds) {
  const auto net = Network::path({1, 2, 2, 1}, 2);
  const auto r = solve_oracle(net);
  EXPECT_EQ(r.cost, 3);
  EXPECT_TRUE(verify_solution(net, r.assignment));
  // First feasible assignment in lexicographic order.
  EXPECT_EQ(r.assignment, IncentiveAssignment({0, 1, 2, 0}));
}

TEST(OracleTest, CliqueWithinOneRound) {
  const auto net = Network::clique({1, 1, 2, 3}, 1);
  const auto r = solve_oracle(net);
  EXPECT_EQ(r.cost, 3);
  EXPECT_TRUE(verify_solution(net, IncentiveAssignment({1, 1, 0, 1})));
}

TEST(OracleTest, ZeroRoundsCostsAllThresholds) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto net = generate_instance({Kind::general, 7, 0, seed, {}});
    EXPECT_EQ(solve_oracle(net).cost, net.threshold_sum());
  }
}

TEST(OracleTest, SizeLimit) {
  const auto net = Network::path(std::vector<int>(13, 1), 3);
  EXPECT_THROW(solve_oracle(net), OracleSizeError);
  OracleConfig bigger;
  bigger.node_limit = 13;
  EXPECT_EQ(solve_oracle(net, bigger).cost, 2);
  OracleConfig too_big;
  too_big.node_limit = 17;
  EXPECT_THROW(solve_oracle(net, too_big), std::invalid_argument);
}

TEST(OracleTest, CostCapIsDistinctFromInfeasible) {
  OracleConfig cfg;
  cfg.cost_cap = 2;
  EXPECT_THROW(solve_oracle(Network::path({1, 2, 2, 1}, 2), cfg), OracleCapError);
  cfg.cost_cap = 3;
  EXPECT_EQ(solve_oracle(Network::path({1, 2, 2, 1}, 2), cfg).cost, 3);
}

TEST(OracleTest, RejectsInvalidInstance) {
  EXPECT_THROW(solve_oracle(Network::path({2, 2, 2, 1}, 2)), ValidationError);
}

Network relabel(const Network& net, const std::vector<NodeId>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : net.canonical_edges()) {
    int u = perm[e.u], v = perm[e.v];
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  std::vector<int> t(net.size());
  for (NodeId v = 0; v < net.size(); ++v) t[perm[v]] = net.threshold(v);
  return Network::from_edges(net.size(), edges, std::move(t), net.lambda());
}

TEST(OracleProperty, InvariantUnderRelabeling) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto net = generate_instance({Kind::general, 3 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 3), rng(), {}});
    std::vector<NodeId> perm(net.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(solve_oracle(net).cost, solve_oracle(relabel(net, perm)).cost);
  }
}

TEST(OracleProperty, NonIncreasingInLambda) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const auto net = generate_instance({Kind::general, 3 + static_cast<int>(rng() % 6), 0, rng(), {}});
    std::int64_t prev = solve_oracle(net).cost;
    for (int lambda = 1; lambda <= 4; ++lambda) {
      const std::int64_t cur = solve_oracle(net.with_lambda(lambda)).cost;
      EXPECT_LE(cur, prev);
      prev = cur;
    }
  }
}

TEST(OracleProperty, NonDecreasingInThresholds) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto net = generate_instance({Kind::general, 3 + static_cast<int>(rng() % 6), 2, rng(), {}});
    std::vector<int> t(net.thresholds().begin(), net.thresholds().end());
    const NodeId v = static_cast<NodeId>(rng() % net.size());
    if (t[v] == net.degree(v)) continue;
    ++t[v];
    EXPECT_LE(solve_oracle(net).cost, solve_oracle(net.with_thresholds(t)).cost);
  }
}

// OPT with the right end influenced at round 0 for free.
std::int64_t opt_right_end_free(const PathInstance& path) {
  const auto net = path.to_network();
  const int n = path.size();
  auto p = IncentiveAssignment::zeros(n);
  p[n - 1] = 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  while (true) {
    if (verify_solution(net, p)) best = std::min(best, assignment_cost(p) - 1);
    int i = 0;
    while (i < n - 1 && p[i] == path.thresholds[i]) p[i++] = 0;
    if (i == n - 1) break;
    ++p[i];
  }
  return best;
}

TEST(OracleProperty, BoundaryVariantChain) {
  const int lambda = 3;
  for (int n = 2; n <= 7; ++n) {
    for (int mask = 0; mask < (1 << std::max(n - 2, 0)); ++mask) {
      PathInstance path{std::vector<int>(n, 1), lambda};
      for (int i = 1; i + 1 < n; ++i) path.thresholds[i] = 1 + ((mask >> (i - 1)) & 1);

      const std::int64_t helped = opt_right_end_free(path);
      const std::int64_t plain = solve_oracle(path.to_network()).cost;
      std::vector<std::int64_t> early;
      for (int l = 1; l <= lambda; ++l)
        early.push_back(solve_oracle(augment_with_dummy_nodes(path, Side::right, l).to_network()).cost);

      EXPECT_LE(helped, plain);
      EXPECT_LE(plain, early[0]);
      for (std::size_t a = 1; a < early.size(); ++a) EXPECT_LE(early[a - 1], early[a]);
      EXPECT_LE(early.back(), helped + 1);
    }
  }
}

}  // namespace
}  // namespace tbi
