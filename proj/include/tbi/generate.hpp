#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tbi/network.hpp"

namespace tbi {

struct GenerateOptions {
  Kind kind = Kind::path;
  int n = 2;
  int lambda = 1;
  std::uint64_t seed = 0;
  std::optional<int> tmax;
};

namespace detail {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Node i >= 1 attaches to a uniformly random earlier node.
inline std::vector<Edge> random_attachment_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int v = 1; v < n; ++v) edges.push_back({uniform(rng, 0, v - 1), v});
  return edges;
}

inline std::vector<int> degree_bounded_thresholds(int n, std::span<const Edge> edges,
                                                  std::optional<int> tmax,
                                                  std::mt19937_64& rng) {
  std::vector<int> deg(n, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::vector<int> t(n);
  for (int v = 0; v < n; ++v) t[v] = uniform(rng, 1, std::min(deg[v], tmax.value_or(deg[v])));
  return t;
}

}  // namespace detail

// Seeded random instance; identical options give identical networks.
inline Network generate_instance(const GenerateOptions& opt) {
  if (opt.n < 2) throw std::invalid_argument("generator needs n >= 2");
  if (opt.lambda < 0) throw std::invalid_argument("generator needs lambda >= 0");
  if (opt.tmax && *opt.tmax < 1) throw std::invalid_argument("tmax must be >= 1");
  std::mt19937_64 rng(opt.seed);
  const int n = opt.n;

  switch (opt.kind) {
    case Kind::path: {
      std::vector<int> t(n, 1);
      const int cap = std::min(2, opt.tmax.value_or(2));
      for (int i = 1; i + 1 < n; ++i) t[i] = detail::uniform(rng, 1, cap);
      return Network::path(std::move(t), opt.lambda);
    }
    case Kind::clique: {
      std::vector<int> t(n);
      const int cap = std::min(n - 1, opt.tmax.value_or(n - 1));
      for (int& x : t) x = detail::uniform(rng, 1, cap);
      return Network::clique(std::move(t), opt.lambda);
    }
    case Kind::tree: {
      auto edges = detail::random_attachment_tree(n, rng);
      auto t = detail::degree_bounded_thresholds(n, edges, opt.tmax, rng);
      return Network::from_edges(n, edges, std::move(t), opt.lambda, Kind::tree);
    }
    case Kind::general: {
      // Random spanning tree plus about n/2 extra distinct edges.
      auto edges = detail::random_attachment_tree(n, rng);
      std::set<Edge> present(edges.begin(), edges.end());
      const std::int64_t room = std::int64_t{n} * (n - 1) / 2 - (n - 1);
      const std::int64_t extra = std::min<std::int64_t>(n / 2, room);
      while (static_cast<std::int64_t>(present.size()) < (n - 1) + extra) {
        int u = detail::uniform(rng, 0, n - 1);
        int v = detail::uniform(rng, 0, n - 1);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (present.insert({u, v}).second) edges.push_back({u, v});
      }
      std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
      });
      auto t = detail::degree_bounded_thresholds(n, edges, opt.tmax, rng);
      return Network::from_edges(n, edges, std::move(t), opt.lambda, Kind::general);
    }
  }
  throw std::invalid_argument("unknown kind");
}

}  // namespace tbi
