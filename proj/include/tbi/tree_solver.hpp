#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tbi/cost.hpp"
#include "tbi/diffusion.hpp"
#include "tbi/network.hpp"

namespace tbi {

struct RootedTree {
  NodeId root = 0;
  std::vector<NodeId> parent;  // -1 at the root
  std::vector<std::vector<NodeId>> children;  // ascending node id
  std::vector<NodeId> post_order;  // children before parents

  int size() const { return static_cast<int>(parent.size()); }
};

inline RootedTree root_and_order(const Network& net, NodeId root = 0) {
  const int n = net.size();
  if (n < 1 || root < 0 || root >= n)
    throw ValidationError("root " + std::to_string(root) + " out of range");
  if (!detail::is_tree(net)) throw ValidationError("network is not a tree");

  RootedTree tree;
  tree.root = root;
  tree.parent.assign(n, -1);
  tree.children.assign(n, {});
  tree.post_order.reserve(n);

  const Network adj = net.explicit_copy();
  std::vector<char> seen(n, 0);
  // Iterative DFS; each frame is (node, next neighbour position).
  std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
  seen[root] = 1;
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    const auto nbrs = adj.neighbors(v);
    if (pos < nbrs.size()) {
      const NodeId u = nbrs[pos++];
      if (!seen[u]) {
        seen[u] = 1;
        tree.parent[u] = v;
        tree.children[v].push_back(u);
        stack.push_back({u, 0});
      }
    } else {
      tree.post_order.push_back(v);
      stack.pop_back();
    }
  }
  return tree;
}

enum class Variant : std::uint8_t { full = 0, reduced = 1 };

// How a node's subtree is entered during backtracking: the round by which the
// node is influenced and whether it uses its parent's unit of influence.
struct TableEntryRef {
  int round = 0;
  Variant variant = Variant::full;
  friend bool operator==(const TableEntryRef&, const TableEntryRef&) = default;
};

// P[v, round, variant] for one node, plus the bookkeeping needed to
// backtrack: the chosen number of contributing children per entry and the
// winning branch of every aggregation cell.
class NodeTable {
 public:
  NodeTable() = default;
  NodeTable(int rounds, int threshold, int children)
      : rounds_(rounds),
        threshold_(threshold),
        children_(children),
        entries_(2 * (rounds + 1), Cost::infinity()),
        chosen_j_(2 * (rounds + 1), 0) {}

  int rounds() const { return rounds_; }
  int threshold() const { return threshold_; }
  int children() const { return children_; }

  int threshold_of(Variant var) const {
    return var == Variant::full ? threshold_ : threshold_ - 1;
  }

  Cost at(int round, Variant var) const { return entries_[slot(round, var)]; }
  Cost& at(int round, Variant var) { return entries_[slot(round, var)]; }
  int chosen_children(int round, Variant var) const {
    return chosen_j_[slot(round, var)];
  }
  void set_chosen_children(int round, Variant var, int j) {
    chosen_j_[slot(round, var)] = j;
  }

  // Cheapest entry with the full threshold and round <= `round`.
  std::pair<Cost, int> best_full_upto(int round) const {
    if (round < 0) return {Cost::infinity(), -1};
    return {prefix_full_[round], prefix_full_arg_[round]};
  }
  // Cheapest entry with the reduced threshold and round >= `round`.
  std::pair<Cost, int> best_reduced_from(int round) const {
    if (round > rounds_) return {Cost::infinity(), -1};
    return {suffix_reduced_[round], suffix_reduced_arg_[round]};
  }

  void finalize() {
    prefix_full_.assign(rounds_ + 1, Cost::infinity());
    prefix_full_arg_.assign(rounds_ + 1, -1);
    suffix_reduced_.assign(rounds_ + 2, Cost::infinity());
    suffix_reduced_arg_.assign(rounds_ + 2, -1);
    for (int l = 0; l <= rounds_; ++l) {
      prefix_full_[l] = l > 0 ? prefix_full_[l - 1] : Cost::infinity();
      prefix_full_arg_[l] = l > 0 ? prefix_full_arg_[l - 1] : -1;
      if (at(l, Variant::full) < prefix_full_[l]) {
        prefix_full_[l] = at(l, Variant::full);
        prefix_full_arg_[l] = l;
      }
    }
    for (int l = rounds_; l >= 0; --l) {
      suffix_reduced_[l] = suffix_reduced_[l + 1];
      suffix_reduced_arg_[l] = suffix_reduced_arg_[l + 1];
      if (at(l, Variant::reduced) <= suffix_reduced_[l] &&
          at(l, Variant::reduced).finite()) {
        suffix_reduced_[l] = at(l, Variant::reduced);
        suffix_reduced_arg_[l] = l;
      }
    }
  }

  // Aggregation branch tags for rounds 1..rounds, one byte per cell (i, j),
  // i in [0, children], j in [0, threshold]; 1 = child i contributes.
  std::vector<std::uint8_t>& tags() { return tags_; }
  bool contributed(int round, int i, int j) const {
    const std::size_t cells = static_cast<std::size_t>(children_ + 1) * (threshold_ + 1);
    return tags_[(round - 1) * cells + static_cast<std::size_t>(i) * (threshold_ + 1) + j] != 0;
  }

 private:
  std::size_t slot(int round, Variant var) const {
    return static_cast<std::size_t>(round) * 2 + static_cast<std::size_t>(var);
  }

  int rounds_ = 0;
  int threshold_ = 1;
  int children_ = 0;
  std::vector<Cost> entries_;
  std::vector<int> chosen_j_;
  std::vector<Cost> prefix_full_;
  std::vector<int> prefix_full_arg_;
  std::vector<Cost> suffix_reduced_;
  std::vector<int> suffix_reduced_arg_;
  std::vector<std::uint8_t> tags_;
};

// Leaf with threshold 1: either paid for at round 0, or influenced by its
// parent at some round >= 1 for free.
inline NodeTable leaf_table(int rounds) {
  NodeTable table(rounds, 1, 0);
  table.at(0, Variant::full) = Cost(1);
  table.set_chosen_children(0, Variant::full, 0);
  for (int l = 1; l <= rounds; ++l) {
    table.at(l, Variant::reduced) = Cost(0);
    table.set_chosen_children(l, Variant::reduced, 0);
  }
  table.finalize();
  return table;
}

struct ChildOption {
  Cost cost = Cost::infinity();
  TableEntryRef entry;
};

// Cost of one child subtree when the parent is influenced at `round`.
// A contributing child must be influenced strictly before `round` on its own;
// a non-contributing child is either influenced by `round` on its own or
// later with the parent's help.
inline ChildOption child_option(const NodeTable& child, int round,
                                bool contributes) {
  if (contributes) {
    auto [c, l] = child.best_full_upto(round - 1);
    return {c, {l, Variant::full}};
  }
  auto [full, lf] = child.best_full_upto(round);
  auto [reduced, lr] = child.best_reduced_from(round + 1);
  if (reduced < full) return {reduced, {lr, Variant::reduced}};
  return {full, {lf, Variant::full}};
}

inline Cost child_option_cost(const NodeTable& child, int round, bool contributes) {
  return child_option(child, round, contributes).cost;
}

// A_{v,round}[i][j]: cheapest way to influence the subtrees of the first i
// children such that at least j of those children are influenced before
// `round` without help from v.
struct ChildAggregation {
  int children = 0;
  int threshold_cap = 0;
  std::vector<Cost> cells;
  std::vector<std::uint8_t> contributes;

  Cost at(int i, int j) const { return cells[index(i, j)]; }
  bool took_contribution(int i, int j) const { return contributes[index(i, j)] != 0; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * (threshold_cap + 1) + static_cast<std::size_t>(j);
  }
};

inline ChildAggregation aggregate_children(std::span<const NodeTable* const> kids,
                                           int round, int threshold_cap) {
  ChildAggregation agg;
  agg.children = static_cast<int>(kids.size());
  agg.threshold_cap = threshold_cap;
  const std::size_t cells = static_cast<std::size_t>(agg.children + 1) * (threshold_cap + 1);
  agg.cells.assign(cells, Cost::infinity());
  agg.contributes.assign(cells, 0);
  agg.cells[agg.index(0, 0)] = Cost(0);
  for (int i = 1; i <= agg.children; ++i) {
    const Cost with = child_option_cost(*kids[i - 1], round, true);
    const Cost without = child_option_cost(*kids[i - 1], round, false);
    const int jmax = std::min(i, threshold_cap);
    for (int j = 0; j <= jmax; ++j) {
      const Cost branch_ii = agg.at(i - 1, j) + without;
      const Cost branch_i = j > 0 ? agg.at(i - 1, j - 1) + with : Cost::infinity();
      if (branch_i < branch_ii) {
        agg.cells[agg.index(i, j)] = branch_i;
        agg.contributes[agg.index(i, j)] = 1;
      } else {
        agg.cells[agg.index(i, j)] = branch_ii;
      }
    }
  }
  return agg;
}

// Fills P[v, *, *] for an internal node (or a leaf, which reduces to the
// general recurrence with no children) from its children's tables.
inline NodeTable node_table(int threshold, std::span<const NodeTable* const> kids,
                            int rounds) {
  if (kids.empty() && threshold == 1) return leaf_table(rounds);
  const int d = static_cast<int>(kids.size());
  NodeTable table(rounds, threshold, d);

  Cost base(0);
  for (const NodeTable* kid : kids) base += child_option_cost(*kid, 0, false);
  for (Variant var : {Variant::full, Variant::reduced}) {
    const int t = table.threshold_of(var);
    table.at(0, var) = Cost(t) + base;
    table.set_chosen_children(0, var, 0);
  }

  auto& tags = table.tags();
  tags.reserve(static_cast<std::size_t>(rounds) * (d + 1) * (threshold + 1));
  for (int l = 1; l <= rounds; ++l) {
    const auto agg = aggregate_children(kids, l, threshold);
    tags.insert(tags.end(), agg.contributes.begin(), agg.contributes.end());
    for (Variant var : {Variant::full, Variant::reduced}) {
      const int t = table.threshold_of(var);
      Cost best = Cost::infinity();
      int best_j = 0;
      for (int j = 0; j <= std::min(t, d); ++j) {
        const Cost c = Cost(t - j) + agg.at(d, j);
        if (c < best) {
          best = c;
          best_j = j;
        }
      }
      table.at(l, var) = best;
      table.set_chosen_children(l, var, best_j);
    }
  }

  for (int l = 0; l <= rounds; ++l) {
    if (table.at(l, Variant::reduced) > table.at(l, Variant::full))
      throw std::logic_error("tree table not monotone in the threshold");
  }
  table.finalize();
  return table;
}

struct TreeSolution {
  SolveResult result;
  RootedTree tree;
  std::vector<NodeTable> tables;
  int rounds = 0;  // lambda clamped to n
  int root_round = 0;
};

inline TreeSolution solve_tree_detailed(const Network& net, NodeId root = 0) {
  require_valid(net);
  TreeSolution sol;
  sol.tree = root_and_order(net, root);
  const int n = net.size();
  const int rounds = std::min(net.lambda(), n);
  sol.rounds = rounds;
  sol.tables.resize(n);

  std::vector<const NodeTable*> kids;
  for (NodeId v : sol.tree.post_order) {
    kids.clear();
    for (NodeId c : sol.tree.children[v]) kids.push_back(&sol.tables[c]);
    sol.tables[v] = node_table(net.threshold(v), kids, rounds);
  }

  const NodeTable& top = sol.tables[sol.tree.root];
  auto [best, root_round] = top.best_full_upto(rounds);
  if (!best.finite()) throw std::logic_error("tree root has no feasible entry");
  sol.root_round = root_round;

  auto p = IncentiveAssignment::zeros(n);
  std::vector<std::pair<NodeId, TableEntryRef>> stack{
      {sol.tree.root, {root_round, Variant::full}}};
  while (!stack.empty()) {
    auto [v, ref] = stack.back();
    stack.pop_back();
    const NodeTable& table = sol.tables[v];
    const auto& kids_of_v = sol.tree.children[v];
    int j = table.chosen_children(ref.round, ref.variant);
    p[v] = table.threshold_of(ref.variant) - j;
    if (ref.round == 0) {
      for (NodeId c : kids_of_v)
        stack.push_back({c, child_option(sol.tables[c], 0, false).entry});
      continue;
    }
    for (int i = static_cast<int>(kids_of_v.size()); i >= 1; --i) {
      const NodeId c = kids_of_v[i - 1];
      const bool contributes = table.contributed(ref.round, i, j);
      stack.push_back({c, child_option(sol.tables[c], ref.round, contributes).entry});
      if (contributes) --j;
    }
  }

  sol.result = make_result(net, std::move(p), SolverTag::tree);
  if (sol.result.cost != best.value())
    throw std::logic_error("tree backtracking cost mismatch");
  return sol;
}

inline SolveResult solve_tree(const Network& net, NodeId root = 0) {
  return solve_tree_detailed(net, root).result;
}

}  // namespace tbi
