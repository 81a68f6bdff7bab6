#include "clawtree/oblique.hpp"

#include <algorithm>

namespace clawtree {

bool is_oblique_neighbor(const Graph& g, const RootedTree& t, Vertex v, const Edge& e) {
  return g.adjacent(v, far_endpoint(t, e, v));
}

std::vector<Edge> oblique_edges(const Graph& g, const RootedTree& t, Vertex v) {
  std::vector<Edge> out;
  for (const Edge& e : t.edges())
    if (is_oblique_neighbor(g, t, v, e)) out.push_back(e);
  return out;
}

std::size_t oblique_degree(const Graph& g, const RootedTree& t, Vertex v) {
  return static_cast<std::size_t>(std::count_if(t.edges().begin(), t.edges().end(), [&](const Edge& e) {
    return is_oblique_neighbor(g, t, v, e);
  }));
}

bool has_oblique_neighbor_in(const Graph& g, const RootedTree& t, const Edge& e,
                             std::span<const Vertex> set) {
  return std::any_of(set.begin(), set.end(), [&](Vertex v) { return is_oblique_neighbor(g, t, v, e); });
}

std::optional<Edge> pseudoadjacency_witness(const Graph& g, const RootedTree& t, Vertex u, Vertex v) {
  for (const Edge& e : t.edges())
    if (is_oblique_neighbor(g, t, u, e) && is_oblique_neighbor(g, t, v, e)) return e;
  return std::nullopt;
}

bool is_pseudoindependent(const Graph& g, const RootedTree& t, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (pseudoadjacency_witness(g, t, set[i], set[j])) return false;
  return true;
}

}  // namespace clawtree
