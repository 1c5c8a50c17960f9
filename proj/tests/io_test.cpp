#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "tbi/bench.hpp"
#include "tbi/dispatch.hpp"
#include "tbi/generate.hpp"
#include "tbi/io.hpp"

namespace tbi {
namespace {

constexpr const char* kPathFile =
    "tbi v1\n"
    "nodes 4\n"
    "lambda 2\n"
    "kind path\n"
    "thresholds 1 2 2 1\n";

TEST(ParseInstance, MinimalPath) {
  const auto net = parse_instance(kPathFile);
  EXPECT_EQ(net.size(), 4);
  EXPECT_EQ(net.lambda(), 2);
  EXPECT_EQ(net.kind(), Kind::path);
  EXPECT_EQ(net, Network::path({1, 2, 2, 1}, 2));
}

TEST(ParseInstance, CliqueEdgesAreImplied) {
  const auto net = parse_instance(
      "tbi v1  # header\n"
      "nodes 5\nlambda 1\nkind clique\n"
      "thresholds 1 4 2 3 1  # per node\n");
  EXPECT_EQ(net.edge_count(), 10);
  EXPECT_EQ(detect_shape(net), Kind::clique);
}

TEST(ParseInstance, TreeWithTooManyEdges) {
  const std::string text =
      "tbi v1\nnodes 3\nlambda 1\nkind tree\nthresholds 1 1 1\n"
      "edges 3\n0 1\n1 2\n0 2\n";
  try {
    parse_instance(text);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("tree must have n-1 edges"), std::string::npos);
  }
}

TEST(ParseInstance, SyntaxErrorsCarryPosition) {
  try {
    parse_instance("tbi v1\nnodes 4\nlambda x2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 8);
  }
  EXPECT_THROW(parse_instance("tbi v2\n"), ParseError);
  EXPECT_THROW(parse_instance(std::string(kPathFile) + "nodes 4\n"), ParseError);
  EXPECT_THROW(parse_instance(std::string(kPathFile) + "edges 1\n0 1\n"), ParseError);
  EXPECT_THROW(parse_instance("tbi v1\nnodes 2\nlambda 1\nkind tree\nthresholds 1 1\n"), ParseError);
  EXPECT_THROW(parse_instance("tbi v1\nnodes 3\nlambda 1\nkind path\nthresholds 1 1\n"), ParseError);
}

TEST(ParseInstance, ValidationFailures) {
  EXPECT_THROW(parse_instance("tbi v1\nnodes 3\nlambda 1\nkind path\nthresholds 1 3 1\n"),
               ValidationError);
}

TEST(Solution, RoundTrip) {
  const SolutionFile s{3, {1, 1, 0, 1}, {0, 1, 2, 0}};
  const auto text = write_solution(s);
  EXPECT_EQ(text, "tbi-solution v1\ncost 3\nincentives 1 1 0 1\nrounds 0 1 2 0\n");
  EXPECT_EQ(parse_solution(text), s);
  EXPECT_THROW(parse_solution("tbi-solution v1\ncost 3\nincentives 1\n"), ParseError);
}

TEST(InstanceProperty, RoundTripsGeneratedInstances) {
  for (int k = 0; k < 4; ++k) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const auto net = generate_instance({static_cast<Kind>(k), 2 + static_cast<int>(seed % 20),
                                          static_cast<int>(seed % 5), seed, {}});
      const auto text = write_instance(net);
      const auto back = parse_instance(text);
      EXPECT_EQ(back, net);
      EXPECT_EQ(write_instance(back), text);
    }
  }
}

TEST(Generate, Deterministic) {
  const GenerateOptions opt{Kind::path, 10, 2, 7, {}};
  EXPECT_EQ(write_instance(generate_instance(opt)), write_instance(generate_instance(opt)));
  const GenerateOptions tree{Kind::general, 40, 3, 99, 2};
  EXPECT_EQ(write_instance(generate_instance(tree)), write_instance(generate_instance(tree)));
}

TEST(Generate, Bounds) {
  const auto clique = generate_instance({Kind::clique, 5, 1, 1, {}});
  for (int t : clique.thresholds()) {
    EXPECT_GE(t, 1);
    EXPECT_LE(t, 4);
  }
  const auto edge = generate_instance({Kind::tree, 2, 1, 0, {}});
  EXPECT_EQ(edge.canonical_edges().size(), 1u);
  EXPECT_EQ(std::vector<int>(edge.thresholds().begin(), edge.thresholds().end()),
            (std::vector<int>{1, 1}));

  const auto capped = generate_instance({Kind::tree, 200, 2, 3, 2});
  for (NodeId v = 0; v < capped.size(); ++v) {
    EXPECT_LE(capped.threshold(v), std::min(2, capped.degree(v)));
  }
  EXPECT_THROW(generate_instance({Kind::path, 1, 1, 0, {}}), std::invalid_argument);
  EXPECT_THROW(generate_instance({Kind::path, 5, 1, 0, 0}), std::invalid_argument);
}

TEST(DetectShape, Examples) {
  EXPECT_EQ(detect_shape(Network::path({1, 2, 1}, 1)), Kind::path);
  EXPECT_EQ(detect_shape(Network::clique({1, 1, 1, 1, 1}, 1)), Kind::clique);
  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(detect_shape(Network::from_edges(4, star, {1, 1, 1, 1}, 1)), Kind::tree);
  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  EXPECT_EQ(detect_shape(Network::from_edges(4, cycle, {1, 1, 1, 1}, 1)), Kind::general);
  // A path with scrambled labels is still a path.
  const std::vector<Edge> scrambled{{0, 2}, {1, 2}, {1, 3}};
  EXPECT_EQ(detect_shape(Network::from_edges(4, scrambled, {1, 1, 2, 1}, 1)), Kind::path);
}

TEST(Dispatch, AutoPicksSpecializedSolver) {
  EXPECT_EQ(solve_with(Network::path({1, 2, 2, 1}, 2), SolverChoice::automatic).solver,
            SolverTag::path);
  EXPECT_EQ(solve_with(Network::path({1, 2, 2, 1}, 1), SolverChoice::automatic).solver,
            SolverTag::tree);
  EXPECT_EQ(solve_with(Network::clique({1, 1, 2, 3}, 1), SolverChoice::automatic).solver,
            SolverTag::clique);
  const auto general = generate_instance({Kind::general, 6, 2, 4, {}});
  ASSERT_EQ(detect_shape(general), Kind::general);
  EXPECT_EQ(solve_with(general, SolverChoice::automatic).solver, SolverTag::oracle);
  EXPECT_THROW(solve_with(generate_instance({Kind::general, 50, 2, 4, {}}), SolverChoice::automatic),
               InapplicableError);
}

TEST(Dispatch, ExplicitChoiceMustApply) {
  EXPECT_THROW(solve_with(Network::clique({1, 1, 2, 3}, 1), SolverChoice::path), InapplicableError);
  EXPECT_THROW(solve_with(Network::path({1, 2, 1}, 2), SolverChoice::clique), InapplicableError);
  EXPECT_EQ(solve_with(Network::path({1, 2, 2, 1}, 2), SolverChoice::tree).cost, 3);
  EXPECT_EQ(solve_with(Network::path({1, 2, 2, 1}, 2), SolverChoice::oracle).cost, 3);
}

TEST(Dispatch, RelabeledPathKeepsNodeIds) {
  const std::vector<Edge> scrambled{{0, 2}, {1, 2}, {1, 3}};  // 0-2-1-3
  const auto net = Network::from_edges(4, scrambled, {1, 2, 2, 1}, 2);
  const auto r = solve_with(net, SolverChoice::automatic);
  EXPECT_EQ(r.solver, SolverTag::path);
  EXPECT_EQ(r.cost, 3);
  EXPECT_TRUE(verify_solution(net, r.assignment));
}

TEST(Bench, RepeatsAndReportsMedian) {
  const std::vector<int> sizes{50, 100};
  const auto rows = run_bench(Kind::clique, sizes, 3, 3, 1);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.samples_ms.size(), 3u);
    auto sorted = row.samples_ms;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(row.median_ms, sorted[1]);
    EXPECT_EQ(row.solver, SolverTag::clique);
  }
  const auto again = run_bench(Kind::clique, sizes, 3, 1, 1);
  EXPECT_EQ(again[0].cost, rows[0].cost);
  EXPECT_EQ(format_bench(rows).substr(0, 4), "kind");
}

}  // namespace
}  // namespace tbi
