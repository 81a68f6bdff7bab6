#pragma once

#include <optional>
#include <span>
#include <vector>

#include "clawtree/graph.hpp"
#include "clawtree/tree.hpp"

namespace clawtree {

// A vertex v is an oblique neighbour of a tree edge e when v is adjacent in
// the host graph to the endpoint of e farther from v. The endpoints of e
// are oblique neighbours of e themselves.

struct ObliqueWitness {
  Edge edge;
  Vertex vertex = 0;
  Vertex far = 0;
};

bool is_oblique_neighbor(const Graph& g, const RootedTree& t, Vertex v, const Edge& e);

/// Tree edges having v as an oblique neighbour, canonical order.
std::vector<Edge> oblique_edges(const Graph& g, const RootedTree& t, Vertex v);

/// Always equals deg_G(v): v is adjacent to y exactly when v is an oblique
/// neighbour of the tree edge at y pointing towards v.
std::size_t oblique_degree(const Graph& g, const RootedTree& t, Vertex v);

/// True when e has an oblique neighbour in `set`.
bool has_oblique_neighbor_in(const Graph& g, const RootedTree& t, const Edge& e,
                             std::span<const Vertex> set);

/// First tree edge (canonical order) having both u and v as oblique neighbours.
std::optional<Edge> pseudoadjacency_witness(const Graph& g, const RootedTree& t, Vertex u, Vertex v);

bool is_pseudoindependent(const Graph& g, const RootedTree& t, std::span<const Vertex> set);

}  // namespace clawtree
