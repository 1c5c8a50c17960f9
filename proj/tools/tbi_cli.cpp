// tbi: solve, verify, generate, and benchmark time-bounded targeting
// instances.
//
// Exit codes: 0 ok, 1 invalid instance or parameters, 2 verification
// failed, 3 solver not applicable.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tbi/tbi.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kVerifyFailed = 2;
constexpr int kDispatch = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << text;
}

int run_solve(const std::string& in_path, const std::string& out_path,
              const std::string& solver_name) {
  tbi::SolverChoice choice;
  if (!tbi::parse_solver_choice(solver_name, choice)) {
    std::cerr << "unknown solver '" << solver_name << "'\n";
    return kDispatch;
  }
  tbi::Network net;
  try {
    net = tbi::parse_instance(read_file(in_path));
  } catch (const std::exception& e) {
    std::cerr << in_path << ": " << e.what() << "\n";
    return kInvalid;
  }
  try {
    const auto result = tbi::solve_with(net, choice);
    emit(tbi::write_solution(tbi::to_solution_file(result)), out_path);
    std::cerr << "solver " << tbi::to_string(result.solver) << ", cost " << result.cost << "\n";
    return kOk;
  } catch (const tbi::InapplicableError& e) {
    std::cerr << e.what() << "\n";
    return kDispatch;
  } catch (const tbi::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  }
}

int run_verify(const std::string& in_path, const std::string& sol_path) {
  tbi::Network net;
  try {
    net = tbi::parse_instance(read_file(in_path));
  } catch (const std::exception& e) {
    std::cerr << in_path << ": " << e.what() << "\n";
    return kInvalid;
  }
  tbi::SolutionFile sol;
  try {
    sol = tbi::parse_solution(read_file(sol_path));
  } catch (const std::exception& e) {
    std::cerr << sol_path << ": " << e.what() << "\n";
    return kVerifyFailed;
  }
  const tbi::IncentiveAssignment p(sol.incentives);
  try {
    tbi::check_assignment_bounds(net, p);
  } catch (const std::exception& e) {
    std::cerr << "FAIL: " << e.what() << "\n";
    return kVerifyFailed;
  }
  const auto actual = tbi::assignment_cost(p);
  if (actual != sol.cost) {
    std::cerr << "FAIL: declared cost " << sol.cost << " but incentives sum to " << actual << "\n";
    return kVerifyFailed;
  }
  const auto trace = tbi::simulate(net, p);
  const int done = trace.completion_round();
  if (done == tbi::kNever) {
    std::cerr << "FAIL: " << (net.size() - trace.influenced_count())
              << " node(s) are never influenced\n";
    return kVerifyFailed;
  }
  if (done > net.lambda()) {
    std::cerr << "FAIL: diffusion completes at round " << done << " > lambda " << net.lambda()
              << "\n";
    return kVerifyFailed;
  }
  std::cout << "OK cost " << sol.cost << " completes at round " << done << "\n";
  return kOk;
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-cost incentives for time-bounded threshold diffusion"};
  app.require_subcommand(1);

  std::string in_path, out_path, sol_path, solver = "auto";
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--in", in_path, "Instance file")->required();
  solve->add_option("--out", out_path, "Solution file (default: stdout)");
  solve->add_option("--solver", solver, "auto|path|clique|tree|oracle");

  auto* verify = app.add_subcommand("verify", "Check a solution against an instance");
  verify->add_option("--in", in_path, "Instance file")->required();
  verify->add_option("--solution", sol_path, "Solution file")->required();

  std::string kind_name, sizes_text;
  int n = 0, lambda = 0, repeat = 3;
  std::uint64_t seed = 0;
  std::optional<int> tmax;
  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("--kind", kind_name, "path|clique|tree|general")->required();
  gen->add_option("--n", n, "Node count")->required();
  gen->add_option("--lambda", lambda, "Round budget")->required();
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--tmax", tmax, "Threshold cap");
  gen->add_option("--out", out_path, "Instance file (default: stdout)");

  auto* bench = app.add_subcommand("bench", "Time the solvers on generated instances");
  bench->add_option("--kind", kind_name, "path|clique|tree|general")->required();
  bench->add_option("--sizes", sizes_text, "Comma-separated node counts")->required();
  bench->add_option("--lambda", lambda, "Round budget")->required();
  bench->add_option("--repeat", repeat, "Runs per size (median reported)");
  bench->add_option("--seed", seed, "Random seed")->required();
  bench->add_option("--tmax", tmax, "Threshold cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return run_solve(in_path, out_path, solver);
    if (*verify) return run_verify(in_path, sol_path);

    tbi::Kind kind;
    if (!tbi::parse_kind(kind_name, kind)) {
      std::cerr << "unknown kind '" << kind_name << "'\n";
      return kInvalid;
    }
    if (*gen) {
      try {
        const auto net = tbi::generate_instance({kind, n, lambda, seed, tmax});
        emit(tbi::write_instance(net), out_path);
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
      }
      return kOk;
    }
    if (*bench) {
      std::vector<int> sizes;
      try {
        sizes = parse_sizes(sizes_text);
      } catch (const std::exception&) {
        std::cerr << "bad --sizes '" << sizes_text << "'\n";
        return kInvalid;
      }
      if (repeat < 1) {
        std::cerr << "--repeat must be >= 1\n";
        return kInvalid;
      }
      try {
        const auto rows = tbi::run_bench(kind, sizes, lambda, repeat, seed, tmax);
        std::cout << tbi::format_bench(rows);
      } catch (const tbi::InapplicableError& e) {
        std::cerr << e.what() << "\n";
        return kDispatch;
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
