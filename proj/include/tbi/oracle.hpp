#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tbi/diffusion.hpp"
#include "tbi/network.hpp"

namespace tbi {

struct OracleConfig {
  std::optional<std::int64_t> cost_cap;
  int node_limit = 12;
};

inline constexpr int kOracleHardLimit = 16;

class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class OracleCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Bitmask influence process truncated at the round budget. Kept separate
// from simulate() so the oracle does not share code with what it checks.
class MaskDiffusion {
 public:
  explicit MaskDiffusion(const Network& net)
      : n_(net.size()), lambda_(net.lambda()), nbr_(net.size(), 0) {
    for (NodeId v = 0; v < n_; ++v)
      net.for_each_neighbor(v, [&](NodeId u) { nbr_[v] |= 1u << u; });
    full_ = (1u << n_) - 1;
  }

  bool completes(const std::vector<int>& residual) const {
    std::uint32_t on = 0;
    for (int v = 0; v < n_; ++v)
      if (residual[v] == 0) on |= 1u << v;
    for (int round = 1; round <= lambda_ && on != full_; ++round) {
      std::uint32_t next = on;
      for (int v = 0; v < n_; ++v) {
        if (on >> v & 1u) continue;
        if (std::popcount(nbr_[v] & on) >= residual[v]) next |= 1u << v;
      }
      if (next == on) break;
      on = next;
    }
    return on == full_;
  }

 private:
  int n_;
  int lambda_;
  std::vector<std::uint32_t> nbr_;
  std::uint32_t full_ = 0;
};

}  // namespace detail

// Exhaustive minimum-cost search for small networks of any shape.
//
// Cost levels are tried in increasing order; within a level, assignments are
// enumerated lexicographically (p(0) smallest first) and the first feasible
// one is returned, so the result is both optimal and deterministic.
inline SolveResult solve_oracle(const Network& net, const OracleConfig& cfg = {}) {
  if (cfg.node_limit > kOracleHardLimit)
    throw std::invalid_argument("oracle node_limit " +
                                std::to_string(cfg.node_limit) + " exceeds " +
                                std::to_string(kOracleHardLimit));
  if (net.size() > cfg.node_limit)
    throw OracleSizeError("oracle accepts at most " +
                          std::to_string(cfg.node_limit) + " nodes, got " +
                          std::to_string(net.size()));
  require_valid(net);

  const int n = net.size();
  const detail::MaskDiffusion diffusion(net);
  const std::int64_t total = net.threshold_sum();

  std::vector<int> p(n, 0);
  std::vector<int> residual(n);
  // suffix_cap[v] = sum of t(u) for u >= v
  std::vector<std::int64_t> suffix_cap(n + 1, 0);
  for (int v = n - 1; v >= 0; --v) suffix_cap[v] = suffix_cap[v + 1] + net.threshold(v);

  auto search = [&](auto&& self, int v, std::int64_t remaining) -> bool {
    if (v == n) {
      if (remaining != 0) return false;
      for (int u = 0; u < n; ++u) residual[u] = net.threshold(u) - p[u];
      return diffusion.completes(residual);
    }
    const std::int64_t lo = std::max<std::int64_t>(0, remaining - suffix_cap[v + 1]);
    const std::int64_t hi = std::min<std::int64_t>(net.threshold(v), remaining);
    for (std::int64_t x = lo; x <= hi; ++x) {
      p[v] = static_cast<int>(x);
      if (self(self, v + 1, remaining - x)) return true;
    }
    p[v] = 0;
    return false;
  };

  for (std::int64_t level = 0; level <= total; ++level) {
    if (cfg.cost_cap && level > *cfg.cost_cap)
      throw OracleCapError("oracle cost cap " + std::to_string(*cfg.cost_cap) +
                           " exceeded");
    if (search(search, 0, level))
      return make_result(net, IncentiveAssignment(p), SolverTag::oracle);
  }
  // p = t is always feasible, so the loop returns before this point.
  throw std::logic_error("oracle found no feasible assignment");
}

}  // namespace tbi
