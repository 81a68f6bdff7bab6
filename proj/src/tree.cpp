#include "clawtree/tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace clawtree {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

RootedTree RootedTree::from_edges(std::size_t n, std::span<const Edge> edges, Vertex root) {
  if (n == 0) throw TreeError("tree over an empty vertex set");
  if (root >= n) throw TreeError("root " + std::to_string(root) + " out of range");
  if (edges.size() + 1 != n)
    throw TreeError("a spanning tree on " + std::to_string(n) + " vertices needs " +
                    std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));

  RootedTree t;
  t.root_ = root;
  t.neighbors_.assign(n, {});
  DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n || e.u == e.v) throw TreeError("invalid tree edge " + to_string(e));
    if (!sets.unite(e.u, e.v)) throw TreeError("edge " + to_string(e) + " closes a cycle");
    t.neighbors_[e.u].push_back(e.v);
    t.neighbors_[e.v].push_back(e.u);
  }
  for (auto& nb : t.neighbors_) std::sort(nb.begin(), nb.end());
  t.edges_.assign(edges.begin(), edges.end());
  std::sort(t.edges_.begin(), t.edges_.end());

  t.parent_.assign(n, root);
  t.children_.assign(n, {});
  t.depth_.assign(n, 0);
  t.enter_.assign(n, 0);
  t.exit_.assign(n, 0);

  // Iterative DFS for the Euler-tour interval used by is_ancestor.
  std::size_t clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  t.enter_[root] = clock++;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& nb = t.neighbors_[v];
    if (next < nb.size()) {
      Vertex w = nb[next++];
      if (v != root && w == t.parent_[v]) continue;
      t.parent_[w] = v;
      t.depth_[w] = t.depth_[v] + 1;
      t.children_[v].push_back(w);
      t.enter_[w] = clock++;
      stack.emplace_back(w, 0);
    } else {
      t.exit_[v] = clock++;
      stack.pop_back();
    }
  }
  return t;
}

bool RootedTree::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  if (a != root_ && parent_[a] == b) return true;
  return b != root_ && parent_[b] == a;
}

Vertex RootedTree::lca(Vertex a, Vertex b) const {
  while (!is_ancestor(a, b)) a = parent_[a];
  return a;
}

bool RootedTree::on_path(Vertex x, Vertex a, Vertex b) const {
  return (is_ancestor(x, a) || is_ancestor(x, b)) && is_ancestor(lca(a, b), x);
}

RootedTree RootedTree::rerooted(Vertex new_root) const {
  return from_edges(vertex_count(), edges_, new_root);
}

bool spans(const Graph& g, const RootedTree& t) {
  if (g.vertex_count() != t.vertex_count()) return false;
  return std::all_of(t.edges().begin(), t.edges().end(), [&](const Edge& e) { return g.has_edge(e); });
}

RootedTree dfs_spanning_tree(const Graph& g, Vertex root) {
  const std::size_t n = g.vertex_count();
  if (root >= n) throw TreeError("root " + std::to_string(root) + " out of range");
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Edge> edges;
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  seen[root] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto nb = g.neighbors(v);
    if (next < nb.size()) {
      Vertex w = nb[next++];
      if (seen[w]) continue;
      seen[w] = 1;
      edges.emplace_back(v, w);
      stack.emplace_back(w, 0);
    } else {
      stack.pop_back();
    }
  }
  if (edges.size() + 1 != n) throw TreeError("graph is disconnected");
  return RootedTree::from_edges(n, edges, root);
}

std::vector<Vertex> path_between(const RootedTree& t, Vertex u, Vertex v) {
  const Vertex a = t.lca(u, v);
  std::vector<Vertex> head;
  for (Vertex x = u; x != a; x = *t.parent(x)) head.push_back(x);
  head.push_back(a);
  std::vector<Vertex> tail;
  for (Vertex x = v; x != a; x = *t.parent(x)) tail.push_back(x);
  head.insert(head.end(), tail.rbegin(), tail.rend());
  return head;
}

Vertex toward(const RootedTree& t, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("toward(u, u) is undefined");
  if (!t.is_ancestor(u, v)) return *t.parent(u);
  for (Vertex c : t.children(u))
    if (t.is_ancestor(c, v)) return c;
  throw TreeError("inconsistent ancestry");  // unreachable for a valid tree
}

namespace {

// (parent endpoint, child endpoint) of a tree edge.
std::pair<Vertex, Vertex> orient(const RootedTree& t, const Edge& e) {
  if (t.parent(e.v) == e.u) return {e.u, e.v};
  if (t.parent(e.u) == e.v) return {e.v, e.u};
  throw TreeError(to_string(e) + " is not a tree edge");
}

}  // namespace

Vertex far_endpoint(const RootedTree& t, const Edge& e, Vertex v) {
  auto [upper, lower] = orient(t, e);
  return t.is_ancestor(lower, v) ? upper : lower;
}

Vertex near_endpoint(const RootedTree& t, const Edge& e, Vertex v) {
  return e.other(far_endpoint(t, e, v));
}

Vertex median(const RootedTree& t, Vertex a, Vertex b, Vertex c) {
  Vertex x = t.lca(a, b), y = t.lca(b, c), z = t.lca(a, c);
  if (t.depth(y) > t.depth(x)) x = y;
  if (t.depth(z) > t.depth(x)) x = z;
  return x;
}

const std::vector<Vertex>& TreeClassification::of_degree(std::size_t d) const {
  static const std::vector<Vertex> empty;
  auto it = branch_by_degree.find(d);
  return it == branch_by_degree.end() ? empty : it->second;
}

TreeClassification classify(const RootedTree& t) {
  if (t.vertex_count() < 2) throw TreeError("classification needs at least two vertices");
  TreeClassification c;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const std::size_t d = t.degree(v);
    if (d == 1) c.leaves.push_back(v);
    if (d >= 3) {
      c.branch.push_back(v);
      c.branch_by_degree[d].push_back(v);
    }
  }
  return c;
}

TrKey tr_key(const RootedTree& t) {
  TrKey key;
  for (Vertex v = 0; v < t.vertex_count(); ++v)
    if (t.degree(v) >= 3) key.pairs.push_back({t.depth(v), t.degree(v)});
  std::sort(key.pairs.begin(), key.pairs.end());
  return key;
}

TrKey tr_key(const RootedTree& t, Vertex root) {
  const std::size_t n = t.vertex_count();
  std::vector<std::size_t> dist(n, n);
  std::queue<Vertex> queue;
  dist[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : t.neighbors(v))
      if (dist[w] == n) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
  }
  TrKey key;
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) >= 3) key.pairs.push_back({dist[v], t.degree(v)});
  std::sort(key.pairs.begin(), key.pairs.end());
  return key;
}

std::strong_ordering PotentialKey::operator<=>(const PotentialKey& o) const {
  if (auto c = b_count <=> o.b_count; c != 0) return c;
  if (auto c = b3_flag <=> o.b3_flag; c != 0) return c;
  if (b3_flag == 1) {
    if (auto c = leaf_count <=> o.leaf_count; c != 0) return c;
    if (auto c = excess5 <=> o.excess5; c != 0) return c;
    return tr_key <=> o.tr_key;
  }
  if (auto c = excess5 <=> o.excess5; c != 0) return c;
  if (auto c = tr_key <=> o.tr_key; c != 0) return c;
  return leaf_count <=> o.leaf_count;
}

std::string to_string(const PotentialKey& key) {
  std::string s = "(" + std::to_string(key.b_count) + ", " + std::to_string(key.b3_flag) + ", " +
                  std::to_string(key.excess5) + ", [";
  for (std::size_t i = 0; i < key.tr_key.pairs.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(key.tr_key.pairs[i].distance) + "," +
         std::to_string(key.tr_key.pairs[i].degree) + ")";
  }
  return s + "], " + std::to_string(key.leaf_count) + ")";
}

PotentialKey potential(const RootedTree& t) {
  const TreeClassification c = classify(t);
  PotentialKey key;
  key.b_count = c.branch.size();
  key.b3_flag = c.of_degree(3).empty() ? 1 : 0;
  for (Vertex b : c.branch)
    if (t.degree(b) >= 5) key.excess5 += t.degree(b) - 4;
  key.tr_key = tr_key(t);
  key.leaf_count = c.leaves.size();
  return key;
}

Vertex canonical_root(const RootedTree& t) {
  if (t.vertex_count() < 2) return 0;
  std::optional<Vertex> best;
  TrKey best_key;
  std::optional<Vertex> first_branch;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(v) < 3) continue;
    if (!first_branch) first_branch = v;
    if (t.degree(v) != 3) continue;
    TrKey key = tr_key(t, v);
    if (!best || key < best_key) {
      best = v;
      best_key = std::move(key);
    }
  }
  if (best) return *best;
  return first_branch.value_or(0);
}

Move Move::normalized() const {
  std::vector<Edge> r = remove, a = add;
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  Move out{{}, {}, claim_tag, detail};
  std::set_difference(r.begin(), r.end(), a.begin(), a.end(), std::back_inserter(out.remove));
  std::set_difference(a.begin(), a.end(), r.begin(), r.end(), std::back_inserter(out.add));
  return out;
}

Move Move::reversed() const { return Move{add, remove, claim_tag, detail}; }

RootedTree apply_move(const Graph& g, const RootedTree& t, const Move& mv) {
  const Move m = mv.normalized();
  if (m.remove.size() != m.add.size())
    throw MoveError("unbalanced swap: removes " + to_string(m.remove) + ", adds " + to_string(m.add));
  for (const Edge& e : m.remove)
    if (!t.has_edge(e)) throw MoveError("removed edge " + to_string(e) + " is not a tree edge");
  for (const Edge& e : m.add) {
    if (e.u >= g.vertex_count() || e.v >= g.vertex_count() || e.u == e.v || !g.has_edge(e))
      throw MoveError("added edge " + to_string(e) + " is not a graph edge");
    if (t.has_edge(e)) throw MoveError("added edge " + to_string(e) + " is already a tree edge");
  }
  std::vector<Edge> edges;
  std::set_difference(t.edges().begin(), t.edges().end(), m.remove.begin(), m.remove.end(),
                      std::back_inserter(edges));
  edges.insert(edges.end(), m.add.begin(), m.add.end());
  RootedTree next;
  try {
    next = RootedTree::from_edges(t.vertex_count(), edges, 0);
  } catch (const TreeError& err) {
    throw MoveError("swap removing " + to_string(m.remove) + " and adding " + to_string(m.add) +
                    " does not yield a spanning tree: " + err.what());
  }
  const Vertex root = canonical_root(next);
  return root == 0 ? next : next.rerooted(root);
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string to_string(std::span<const Edge> edges) {
  std::string s = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ", ";
    s += to_string(edges[i]);
  }
  return s + "}";
}

}  // namespace clawtree
