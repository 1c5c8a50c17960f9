#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "tbi/dispatch.hpp"
#include "tbi/generate.hpp"

namespace tbi {

struct BenchRow {
  Kind kind = Kind::path;
  int n = 0;
  int lambda = 0;
  int repeat = 0;
  double median_ms = 0.0;
  std::int64_t cost = 0;
  SolverTag solver = SolverTag::oracle;
  std::vector<double> samples_ms;
};

// Times the auto-dispatched solver on one generated instance per size.
// The instance for size n uses seed + n so rows are reproducible on their own.
inline std::vector<BenchRow> run_bench(Kind kind, std::span<const int> sizes, int lambda,
                                       int repeat, std::uint64_t seed,
                                       std::optional<int> tmax = std::nullopt) {
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    const Network net = generate_instance({kind, n, lambda, seed + static_cast<std::uint64_t>(n), tmax});
    BenchRow row{kind, n, lambda, repeat, 0.0, 0, SolverTag::oracle, {}};
    for (int r = 0; r < repeat; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = solve_with(net, SolverChoice::automatic);
      const auto stop = std::chrono::steady_clock::now();
      row.samples_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
      row.cost = result.cost;
      row.solver = result.solver;
    }
    auto sorted = row.samples_ms;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty()) row.median_ms = sorted[sorted.size() / 2];
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string format_bench(std::span<const BenchRow> rows) {
  std::ostringstream os;
  os << "kind\tn\tlambda\tsolver\trepeat\tmedian_ms\tcost\n";
  for (const auto& r : rows) {
    os << to_string(r.kind) << '\t' << r.n << '\t' << r.lambda << '\t' << to_string(r.solver)
       << '\t' << r.repeat << '\t' << std::fixed << std::setprecision(3) << r.median_ms << '\t'
       << r.cost << '\n';
  }
  return os.str();
}

}  // namespace tbi
