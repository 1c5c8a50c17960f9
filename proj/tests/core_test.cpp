#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "tbi/cost.hpp"
#include "tbi/diffusion.hpp"
#include "tbi/generate.hpp"
#include "tbi/network.hpp"

namespace tbi {
namespace {

TEST(CostTest, InfinitySaturates) {
  const Cost inf = Cost::infinity();
  EXPECT_EQ(inf + Cost(5), inf);
  EXPECT_EQ(Cost(5) + inf, inf);
  EXPECT_EQ(inf + inf, inf);
  EXPECT_NE(inf, Cost(std::numeric_limits<std::int64_t>::max() - 1));
  EXPECT_LT(Cost(1'000'000'000'000), inf);
  EXPECT_EQ(min(Cost(3), inf), Cost(3));
  EXPECT_EQ(Cost(2) + Cost(3), Cost(5));
}

TEST(ValidateTest, PathWithinDegreeBounds) {
  EXPECT_TRUE(validate_instance(Network::path({1, 2, 2, 1}, 2)).ok());
}

TEST(ValidateTest, EndpointAboveDegree) {
  const auto r = validate_instance(Network::path({2, 2, 2, 1}, 2));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0], "t(0)=2 > d(0)=1");
}

TEST(ValidateTest, SingleNodeRejected) {
  const auto r = validate_instance(Network::path({1}, 1));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations[0], "n >= 2 required");
}

TEST(ValidateTest, StructuralViolationsAreAllReported) {
  const std::vector<Edge> edges{{0, 1}, {1, 1}, {0, 1}};
  const auto r = validate_instance(Network::from_edges(3, edges, {1, 0, 1}, 1));
  EXPECT_GE(r.violations.size(), 3u);  // self-loop, parallel edge, t < 1, ...
}

TEST(ValidateTest, KindHintMustMatch) {
  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_TRUE(validate_instance(Network::from_edges(4, star, {1, 1, 1, 1}, 1, Kind::tree)).ok());
  EXPECT_FALSE(validate_instance(Network::from_edges(4, star, {1, 1, 1, 1}, 1, Kind::path)).ok());
  EXPECT_FALSE(validate_instance(Network::from_edges(4, star, {1, 1, 1, 1}, 1, Kind::clique)).ok());

  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {0, 2}};
  const auto r = validate_instance(Network::from_edges(3, cycle, {1, 1, 1}, 1, Kind::tree));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations[0], "tree must have n-1 edges");
}

TEST(SimulateTest, StallsWhenMiddleNeedsBothNeighbours) {
  const auto net = Network::path({1, 2, 2, 1}, 2);
  const auto trace = simulate(net, IncentiveAssignment({1, 0, 0, 1}));
  EXPECT_EQ(trace.influenced_set(trace.fixpoint_round()), (std::vector<NodeId>{0, 3}));
  EXPECT_EQ(trace.activation_round[1], kNever);
  EXPECT_EQ(trace.activation_round[2], kNever);
}

TEST(SimulateTest, ActivationRounds) {
  const auto net = Network::path({1, 2, 2, 1}, 2);
  const auto trace = simulate(net, IncentiveAssignment({1, 1, 0, 1}));
  EXPECT_EQ(trace.activation_round, (std::vector<int>{0, 1, 2, 0}));
  EXPECT_EQ(trace.fixpoint_round(), 2);
}

TEST(SimulateTest, FullIncentivesActivateAtRoundZero) {
  const auto net = generate_instance({Kind::tree, 12, 3, 5, {}});
  const IncentiveAssignment p({net.thresholds().begin(), net.thresholds().end()});
  const auto trace = simulate(net, p);
  for (int r : trace.activation_round) EXPECT_EQ(r, 0);
}

TEST(SimulateTest, RejectsOutOfBoundsIncentives) {
  const auto net = Network::path({1, 2, 1}, 1);
  EXPECT_THROW(simulate(net, IncentiveAssignment({2, 0, 0})), std::invalid_argument);
  EXPECT_THROW(simulate(net, IncentiveAssignment({-1, 0, 0})), std::invalid_argument);
  EXPECT_THROW(simulate(net, IncentiveAssignment({0, 0})), std::invalid_argument);
}

TEST(SimulateTest, ImplicitCliqueMatchesExplicitAdjacency) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto net = generate_instance({Kind::clique, 2 + static_cast<int>(rng() % 12), 3, rng(), {}});
    IncentiveAssignment p = IncentiveAssignment::zeros(net.size());
    for (NodeId v = 0; v < net.size(); ++v)
      p[v] = static_cast<int>(rng() % (net.threshold(v) + 1));
    EXPECT_EQ(simulate(net, p).activation_round,
              simulate(net.explicit_copy(), p).activation_round);
  }
}

TEST(VerifyTest, Examples) {
  const IncentiveAssignment p({1, 1, 0, 1});
  EXPECT_TRUE(verify_solution(Network::path({1, 2, 2, 1}, 2), p));
  EXPECT_FALSE(verify_solution(Network::path({1, 2, 2, 1}, 1), p));
  EXPECT_TRUE(verify_solution(Network::path({1, 2, 2, 1}, 0), IncentiveAssignment({1, 2, 2, 1})));
}

TEST(AssignmentCostTest, Sums) {
  EXPECT_EQ(assignment_cost(IncentiveAssignment({0, 0, 0})), 0);
  EXPECT_EQ(assignment_cost(IncentiveAssignment({1, 1, 0, 1})), 3);
  EXPECT_EQ(assignment_cost(IncentiveAssignment({1, 2, 2, 1})), 6);
}

IncentiveAssignment random_assignment(const Network& net, std::mt19937_64& rng) {
  auto p = IncentiveAssignment::zeros(net.size());
  for (NodeId v = 0; v < net.size(); ++v)
    p[v] = static_cast<int>(rng() % (net.threshold(v) + 1));
  return p;
}

TEST(SimulateProperty, RoundsGrowMonotonicallyToFixpoint) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Kind kind = static_cast<Kind>(trial % 4);
    const auto net = generate_instance({kind, 2 + static_cast<int>(rng() % 30), 2, rng(), {}});
    const auto trace = simulate(net, random_assignment(net, rng));
    EXPECT_LE(trace.fixpoint_round(), net.size());
    for (int l = 1; l <= trace.fixpoint_round(); ++l) {
      const auto before = trace.influenced_set(l - 1);
      const auto after = trace.influenced_set(l);
      EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
      EXPECT_GT(after.size(), before.size());
    }
  }
}

TEST(SimulateProperty, MoreIncentivesNeverSlowDiffusion) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Kind kind = static_cast<Kind>(trial % 4);
    const auto net = generate_instance({kind, 2 + static_cast<int>(rng() % 20), 2, rng(), {}});
    const auto low = random_assignment(net, rng);
    auto high = low;
    for (NodeId v = 0; v < net.size(); ++v)
      high[v] += static_cast<int>(rng() % (net.threshold(v) - low[v] + 1));
    const auto a = simulate(net, low);
    const auto b = simulate(net, high);
    for (NodeId v = 0; v < net.size(); ++v) {
      if (a.activation_round[v] == kNever) continue;
      ASSERT_NE(b.activation_round[v], kNever);
      EXPECT_LE(b.activation_round[v], a.activation_round[v]);
    }
  }
}

}  // namespace
}  // namespace tbi
