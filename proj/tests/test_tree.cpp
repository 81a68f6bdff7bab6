#include <doctest.h>

#include "clawtree/graph.hpp"
#include "clawtree/instances.hpp"
#include "clawtree/tree.hpp"
#include "support.hpp"

using namespace clawtree;
using testing::tree;

namespace {

RootedTree path4() { return tree(4, {{0, 1}, {1, 2}, {2, 3}}); }
RootedTree star3() { return tree(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace

TEST_CASE("RootedTree structure") {
  const RootedTree t = path4().rerooted(1);
  CHECK(t.root() == 1);
  CHECK_FALSE(t.parent(1));
  CHECK(*t.parent(3) == 2);
  CHECK(t.depth(3) == 2);
  CHECK(t.degree(1) == 2);
  CHECK(t.has_edge(2, 1));
  CHECK_FALSE(t.has_edge(0, 2));
  CHECK(t.is_ancestor(1, 3));
  CHECK_FALSE(t.is_ancestor(3, 1));
  CHECK(t.lca(0, 3) == 1);
  CHECK(t.distance(0, 3) == 3);
  CHECK(t.on_path(2, 0, 3));
  CHECK_FALSE(t.on_path(3, 0, 2));
  CHECK(t == tree(4, {{2, 3}, {0, 1}, {1, 2}}, 1));
}

TEST_CASE("RootedTree rejects non-trees") {
  CHECK_THROWS_AS(tree(4, {{0, 1}, {1, 2}}), TreeError);
  CHECK_THROWS_AS(tree(4, {{0, 1}, {1, 2}, {0, 2}}), TreeError);
  CHECK_THROWS_AS(tree(3, {{0, 1}, {1, 2}}, 5), TreeError);
}

TEST_CASE("dfs_spanning_tree") {
  const RootedTree t = dfs_spanning_tree(cycle_graph(5), 0);
  CHECK(t.edges() == testing::edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  CHECK(t.root() == 0);
  CHECK(spans(cycle_graph(5), t));

  const Graph p = path_graph(4);
  CHECK(dfs_spanning_tree(p, 2) == path4().rerooted(2));
  CHECK_THROWS_AS(dfs_spanning_tree(testing::graph(4, {{0, 1}, {2, 3}}), 0), TreeError);
  CHECK_FALSE(spans(path_graph(4), star3()));
}

TEST_CASE("path_between") {
  CHECK(path_between(path4(), 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(path_between(path4(), 3, 1) == std::vector<Vertex>{3, 2, 1});
  CHECK(path_between(path4(), 2, 2) == std::vector<Vertex>{2});
  CHECK(path_between(star3(), 1, 2) == std::vector<Vertex>{1, 0, 2});
}

TEST_CASE("toward and endpoints") {
  CHECK(toward(path4(), 0, 3) == 1);
  CHECK(toward(path4(), 3, 0) == 2);
  CHECK(toward(star3(), 1, 2) == 0);
  CHECK(far_endpoint(path4(), Edge(1, 2), 0) == 2);
  CHECK(far_endpoint(path4(), Edge(1, 2), 2) == 1);
  CHECK(far_endpoint(star3(), Edge(0, 1), 2) == 1);
  CHECK(near_endpoint(star3(), Edge(0, 1), 2) == 0);
  CHECK(median(star3(), 1, 2, 3) == 0);
  CHECK(median(path4(), 0, 1, 3) == 1);
}

TEST_CASE("classify") {
  const auto p = classify(path4());
  CHECK(p.leaves == std::vector<Vertex>{0, 3});
  CHECK(p.branch.empty());

  const auto s = classify(star3());
  CHECK(s.leaves == std::vector<Vertex>{1, 2, 3});
  CHECK(s.branch == std::vector<Vertex>{0});
  CHECK(s.of_degree(3) == std::vector<Vertex>{0});
  CHECK(s.of_degree(4).empty());

  const Graph sp = spider(3, 2);
  const auto c = classify(dfs_spanning_tree(sp, 0));
  CHECK(c.of_degree(3) == std::vector<Vertex>{0});
  CHECK(c.leaves.size() == 3);
  CHECK_THROWS_AS(classify(tree(1, {})), TreeError);
}

TEST_CASE("tr_key ordering") {
  CHECK(tr_key(star3()).pairs == std::vector<DistanceDegree>{{0, 3}});
  // Root of degree 3 with a degree-4 child.
  const RootedTree t = tree(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 7}});
  CHECK(tr_key(t).pairs == std::vector<DistanceDegree>{{0, 3}, {1, 4}});

  const TrKey a{{{0, 3}, {1, 4}}}, b{{{0, 3}, {2, 3}}}, prefix{{{0, 3}}};
  CHECK(a < b);
  CHECK(prefix < a);
  CHECK(tr_key(t, 1).pairs == std::vector<DistanceDegree>{{0, 4}, {1, 3}});
}

TEST_CASE("potential") {
  const auto ham = potential(path4());
  CHECK(ham.b_count == 0);
  CHECK(ham.b3_flag == 1);
  CHECK(ham.excess5 == 0);
  CHECK(ham.tr_key.pairs.empty());
  CHECK(ham.leaf_count == 2);

  const RootedTree net_tree = tree(6, {{0, 3}, {0, 1}, {0, 2}, {1, 4}, {2, 5}});
  const auto net = potential(net_tree);
  CHECK(net.b_count == 1);
  CHECK(net.b3_flag == 0);
  CHECK(net.excess5 == 0);
  CHECK(net.tr_key.pairs == std::vector<DistanceDegree>{{0, 3}});
  CHECK(net.leaf_count == 3);

  const RootedTree k5_star = tree(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto k5 = potential(k5_star);
  CHECK(k5.b_count == 1);
  CHECK(k5.b3_flag == 1);
  CHECK(k5.excess5 == 0);
  CHECK(k5.tr_key.pairs == std::vector<DistanceDegree>{{0, 4}});
  CHECK(k5.leaf_count == 4);

  CHECK(ham < net);
  CHECK(net < k5);
}

TEST_CASE("potential ordering regimes") {
  // With no degree-3 branch vertex, fewer leaves wins before tr_key.
  PotentialKey a{1, 1, 1, {{{0, 6}}}, 6};
  PotentialKey b{1, 1, 0, {{{0, 5}}}, 5};
  CHECK(b < a);
  PotentialKey c{1, 1, 0, {{{2, 5}}}, 5};
  PotentialKey d{1, 1, 0, {{{0, 5}}}, 6};
  CHECK(c < d);
  // With one, excess5 and tr_key come before the leaf count.
  PotentialKey e{2, 0, 0, {{{0, 3}, {1, 3}}}, 4};
  PotentialKey f{2, 0, 0, {{{0, 3}, {2, 3}}}, 3};
  CHECK(e < f);
}

TEST_CASE("canonical_root") {
  CHECK(canonical_root(path4()) == 0);
  CHECK(canonical_root(path4().rerooted(2)) == 0);
  CHECK(canonical_root(star3().rerooted(3)) == 0);
  // Two degree-3 vertices; the one whose sequence is smaller wins.
  const RootedTree t = tree(8, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {0, 6}, {6, 7}});
  CHECK(classify(t).of_degree(3) == std::vector<Vertex>{1, 2});
  CHECK(canonical_root(t) == 1);
}

TEST_CASE("apply_move") {
  const Graph c5 = cycle_graph(5);
  const RootedTree path = tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const RootedTree moved = apply_move(c5, path, Move{{{0, 1}}, {{4, 0}}, "test", ""});
  CHECK(moved.edges() == testing::edges({{0, 4}, {1, 2}, {2, 3}, {3, 4}}));

  CHECK_THROWS_AS(apply_move(c5, path, Move{{{0, 1}}, {{2, 3}}, "test", ""}), MoveError);
  CHECK_THROWS_AS(apply_move(c5, path, Move{{{0, 2}}, {{4, 0}}, "test", ""}), MoveError);
  CHECK(apply_move(c5, path, Move{{{2, 3}}, {{4, 0}}, "test", ""}).edges() ==
        testing::edges({{0, 1}, {0, 4}, {1, 2}, {3, 4}}));
  // Closes the cycle 0-1-2 and cuts 3 off.
  CHECK_THROWS_AS(apply_move(complete_graph(4), tree(4, {{0, 1}, {1, 2}, {2, 3}}), Move{{{2, 3}}, {{0, 2}}, "test", ""}),
                  MoveError);

  const Graph k4 = complete_graph(4);
  const RootedTree k4_star = tree(4, {{0, 1}, {0, 2}, {0, 3}});
  const RootedTree after = apply_move(k4, k4_star, Move{{{0, 1}}, {{1, 2}}, "claim7", ""});
  CHECK(after.edges() == testing::edges({{0, 2}, {0, 3}, {1, 2}}));
  CHECK(path_between(after, 3, 1) == std::vector<Vertex>{3, 0, 2, 1});
  CHECK(k4_star.edges() == testing::edges({{0, 1}, {0, 2}, {0, 3}}));
}

TEST_CASE("Move normalisation") {
  const Move m{{{2, 1}, {0, 1}}, {{1, 0}, {3, 2}}, "x", ""};
  const Move n = m.normalized();
  CHECK(n.remove == testing::edges({{1, 2}}));
  CHECK(n.add == testing::edges({{2, 3}}));
  CHECK(n.reversed().remove == n.add);
}

TEST_CASE("leaf formula on random spanning trees") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Graph g = random_connected(12, 10, seed);
    const RootedTree t = dfs_spanning_tree(g, static_cast<Vertex>(seed % 12));
    const auto cls = classify(t);
    long long excess = 0;
    for (Vertex v : cls.branch) excess += static_cast<long long>(t.degree(v)) - 2;
    CHECK(static_cast<long long>(cls.leaves.size()) == 2 + excess);
    CHECK(cls.leaves.size() >= cls.branch.size() + 2);
  }
}
