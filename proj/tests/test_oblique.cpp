#include <doctest.h>

#include "clawtree/instances.hpp"
#include "clawtree/oblique.hpp"
#include "support.hpp"

using namespace clawtree;
using testing::graph;
using testing::tree;

TEST_CASE("is_oblique_neighbor") {
  const RootedTree t = tree(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph chord = graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  CHECK(is_oblique_neighbor(chord, t, 0, Edge(1, 2)));
  CHECK_FALSE(is_oblique_neighbor(path_graph(4), t, 0, Edge(1, 2)));
  for (const Edge& e : t.edges()) {
    CHECK(is_oblique_neighbor(path_graph(4), t, e.u, e));
    CHECK(is_oblique_neighbor(path_graph(4), t, e.v, e));
  }
}

TEST_CASE("oblique_degree") {
  const RootedTree p4 = tree(4, {{0, 1}, {1, 2}, {2, 3}});
  for (Vertex v = 0; v < 4; ++v) CHECK(oblique_degree(path_graph(4), p4, v) == path_graph(4).degree(v));

  const RootedTree p6 = dfs_spanning_tree(cycle_graph(6), 0);
  CHECK(oblique_edges(cycle_graph(6), p6, 0) == testing::edges({{0, 1}, {4, 5}}));
  CHECK(oblique_degree(cycle_graph(6), p6, 0) == 2);

  const RootedTree star = tree(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(oblique_degree(complete_graph(4), star, 3) == 3);
}

TEST_CASE("pseudoadjacency") {
  const Graph c6 = cycle_graph(6);
  const RootedTree p6 = dfs_spanning_tree(c6, 0);
  CHECK(pseudoadjacency_witness(c6, p6, 0, 5) == Edge(0, 1));
  CHECK_FALSE(is_pseudoindependent(c6, p6, std::vector<Vertex>{0, 5}));
  CHECK(is_pseudoindependent(c6, p6, std::vector<Vertex>{3}));

  const RootedTree p4 = tree(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(pseudoadjacency_witness(path_graph(4), p4, 0, 3));
  CHECK(pseudoadjacency_witness(path_graph(4), p4, 1, 2) == Edge(1, 2));

  // Net fixpoint tree: the two smallest pendants are pseudoindependent.
  const Graph net = net_graph();
  const RootedTree t = tree(6, {{0, 3}, {0, 1}, {0, 2}, {1, 4}, {2, 5}});
  CHECK(is_pseudoindependent(net, t, std::vector<Vertex>{3, 4}));
  CHECK(has_oblique_neighbor_in(net, t, Edge(1, 4), std::vector<Vertex>{3, 4}));
  CHECK_FALSE(has_oblique_neighbor_in(net, t, Edge(0, 1), std::vector<Vertex>{3, 4}));
}

TEST_CASE("oblique degree equals graph degree on random pairs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_connected(10, seed % 15, seed);
    const RootedTree t = dfs_spanning_tree(g, static_cast<Vertex>(seed % 10));
    for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(oblique_degree(g, t, v) == g.degree(v));
  }
}
