#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tbi/clique_solver.hpp"
#include "tbi/io.hpp"
#include "tbi/oracle.hpp"
#include "tbi/path_solver.hpp"
#include "tbi/tree_solver.hpp"

namespace tbi {

enum class SolverChoice { automatic, path, clique, tree, oracle };

inline bool parse_solver_choice(std::string_view s, SolverChoice& out) {
  if (s == "auto") out = SolverChoice::automatic;
  else if (s == "path") out = SolverChoice::path;
  else if (s == "clique") out = SolverChoice::clique;
  else if (s == "tree") out = SolverChoice::tree;
  else if (s == "oracle") out = SolverChoice::oracle;
  else return false;
  return true;
}

// Requested solver cannot handle this network.
class InapplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kAutoOracleLimit = 12;

namespace detail {

// Path solver on a path graph with arbitrary node labels.
inline SolveResult solve_relabeled_path(const Network& net) {
  const auto order = path_order(net);
  PathInstance path;
  path.lambda = net.lambda();
  for (NodeId v : order) path.thresholds.push_back(net.threshold(v));
  const auto along = solve_path(path);
  auto p = IncentiveAssignment::zeros(net.size());
  for (std::size_t k = 0; k < order.size(); ++k) p[order[k]] = along.assignment[static_cast<int>(k)];
  return make_result(net, std::move(p), along.solver);
}

}  // namespace detail

// Validates, checks applicability, and runs the chosen solver. Auto picks the
// most specialized solver for the detected shape and falls back to the
// oracle for small general graphs.
inline SolveResult solve_with(const Network& net, SolverChoice choice) {
  require_valid(net);
  const Kind shape = detect_shape(net);
  auto need = [&](bool ok, std::string_view solver) {
    if (!ok)
      throw InapplicableError(std::string(solver) + " solver does not apply to a " +
                              std::string(to_string(shape)) + " network");
  };

  if (choice == SolverChoice::automatic) {
    switch (shape) {
      case Kind::path: choice = SolverChoice::path; break;
      case Kind::clique: choice = SolverChoice::clique; break;
      case Kind::tree: choice = SolverChoice::tree; break;
      case Kind::general:
        if (net.size() > kAutoOracleLimit)
          throw InapplicableError("general network with " + std::to_string(net.size()) +
                                  " nodes exceeds the oracle limit of " +
                                  std::to_string(kAutoOracleLimit));
        choice = SolverChoice::oracle;
        break;
    }
  }

  switch (choice) {
    case SolverChoice::path:
      need(shape == Kind::path, "path");
      return detail::solve_relabeled_path(net);
    case SolverChoice::clique:
      need(detail::is_complete(net), "clique");
      return solve_clique(net);
    case SolverChoice::tree:
      need(detail::is_simple(net) && detail::is_tree(net), "tree");
      return solve_tree(net);
    case SolverChoice::oracle:
      if (net.size() > kAutoOracleLimit)
        throw InapplicableError("oracle accepts at most " + std::to_string(kAutoOracleLimit) +
                                " nodes, got " + std::to_string(net.size()));
      return solve_oracle(net);
    case SolverChoice::automatic:
      break;
  }
  throw std::logic_error("unreachable solver choice");
}

}  // namespace tbi
