#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clawtree/graph.hpp"

namespace clawtree {

class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spanning tree with a distinguished root. Immutable; every query that
/// depends on orientation (children, depth, ancestry) is relative to root().
class RootedTree {
 public:
  RootedTree() = default;

  /// Throws TreeError unless `edges` is a spanning tree of {0..n-1}.
  static RootedTree from_edges(std::size_t n, std::span<const Edge> edges, Vertex root);

  std::size_t vertex_count() const { return parent_.size(); }
  Vertex root() const { return root_; }
  std::optional<Vertex> parent(Vertex v) const {
    if (v == root_) return std::nullopt;
    return parent_[v];
  }
  std::span<const Vertex> children(Vertex v) const { return children_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
  std::size_t degree(Vertex v) const { return neighbors_[v].size(); }
  std::size_t depth(Vertex v) const { return depth_[v]; }

  /// Canonical sorted edge list.
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// a lies on the root path of b (a == b counts).
  bool is_ancestor(Vertex a, Vertex b) const {
    return enter_[a] <= enter_[b] && exit_[b] <= exit_[a];
  }
  Vertex lca(Vertex a, Vertex b) const;
  std::size_t distance(Vertex a, Vertex b) const {
    return depth_[a] + depth_[b] - 2 * depth_[lca(a, b)];
  }
  /// x is a vertex of the tree path between a and b (inclusive).
  bool on_path(Vertex x, Vertex a, Vertex b) const;
  /// Both endpoints of e lie on the path between a and b.
  bool on_path(const Edge& e, Vertex a, Vertex b) const {
    return on_path(e.u, a, b) && on_path(e.v, a, b);
  }

  RootedTree rerooted(Vertex new_root) const;

  /// Equal edge sets and equal roots.
  bool operator==(const RootedTree& other) const {
    return root_ == other.root_ && edges_ == other.edges_;
  }

 private:
  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> enter_;
  std::vector<std::size_t> exit_;
  std::vector<Edge> edges_;
};

/// Tree has g's vertex count and every tree edge is an edge of g.
bool spans(const Graph& g, const RootedTree& t);

/// Depth-first spanning tree, neighbours explored in ascending id order.
/// Throws TreeError when g is disconnected or root is out of range.
RootedTree dfs_spanning_tree(const Graph& g, Vertex root);

/// The tree path from u to v, both endpoints included.
std::vector<Vertex> path_between(const RootedTree& t, Vertex u, Vertex v);

/// The tree neighbour of u on the path towards v. Throws std::invalid_argument when u == v.
Vertex toward(const RootedTree& t, Vertex u, Vertex v);

/// Endpoint of tree edge e farther from v (the other endpoint when v is on e).
Vertex far_endpoint(const RootedTree& t, const Edge& e, Vertex v);
/// Endpoint of tree edge e nearer to v.
Vertex near_endpoint(const RootedTree& t, const Edge& e, Vertex v);

/// The unique vertex common to the three pairwise paths between a, b and c.
Vertex median(const RootedTree& t, Vertex a, Vertex b, Vertex c);

struct TreeClassification {
  std::vector<Vertex> leaves;
  std::vector<Vertex> branch;
  std::map<std::size_t, std::vector<Vertex>> branch_by_degree;

  const std::vector<Vertex>& of_degree(std::size_t d) const;
};

/// Leaves (degree 1) and branch vertices (degree >= 3). Throws TreeError for a one-vertex tree.
TreeClassification classify(const RootedTree& t);

struct DistanceDegree {
  std::size_t distance = 0;
  std::size_t degree = 0;
  auto operator<=>(const DistanceDegree&) const = default;
};

/// Sorted (distance-to-root, degree) pairs of the branch vertices. Ordered
/// entrywise; a proper prefix compares smaller.
struct TrKey {
  std::vector<DistanceDegree> pairs;
  auto operator<=>(const TrKey&) const = default;
};

TrKey tr_key(const RootedTree& t);
/// The same sequence measured from another root.
TrKey tr_key(const RootedTree& t, Vertex root);

/// Composite well-founded key that every accepted move must strictly lower.
///
/// b_count and b3_flag always lead. The tail depends on which regime the
/// tree is in, and the regime is fixed by b3_flag, so two keys that tie on
/// the leading fields always compare with the same tail:
///   - no degree-3 branch vertex (b3_flag == 1): leaf_count, excess5, tr_key
///   - otherwise:                                excess5, tr_key, leaf_count
struct PotentialKey {
  std::size_t b_count = 0;
  int b3_flag = 1;  // 0 when some branch vertex has degree exactly 3
  std::size_t excess5 = 0;
  TrKey tr_key;
  std::size_t leaf_count = 0;

  std::strong_ordering operator<=>(const PotentialKey& other) const;
  bool operator==(const PotentialKey& other) const = default;
};

std::string to_string(const PotentialKey& key);

PotentialKey potential(const RootedTree& t);

/// Root selection policy: the degree-3 branch vertex with the smallest
/// (T,r) sequence (smaller id on ties); else the smallest branch vertex;
/// else vertex 0.
Vertex canonical_root(const RootedTree& t);

/// Edge swap. claim_tag names the rule that produced it; detail is free-form.
struct Move {
  std::vector<Edge> remove;
  std::vector<Edge> add;
  std::string claim_tag;
  std::string detail;

  /// Sorted, deduplicated, with edges present on both sides cancelled.
  Move normalized() const;
  Move reversed() const;
};

class MoveError : public TreeError {
 public:
  using TreeError::TreeError;
};

/// Applies the swap and re-roots the result with canonical_root. The input
/// tree is untouched. Throws MoveError when the removed edges are not tree
/// edges, an added edge is missing from g or already in the tree, or the
/// result is not a spanning tree.
RootedTree apply_move(const Graph& g, const RootedTree& t, const Move& mv);

std::string to_string(const Edge& e);
std::string to_string(std::span<const Edge> edges);

}  // namespace clawtree
