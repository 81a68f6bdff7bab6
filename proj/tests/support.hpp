#pragma once

#include <initializer_list>
#include <vector>

#include "clawtree/graph.hpp"
#include "clawtree/tree.hpp"

namespace testing {

inline clawtree::Graph graph(std::size_t nv, std::initializer_list<clawtree::Edge> edges) {
  const std::vector<clawtree::Edge> list(edges);
  return clawtree::Graph::from_edges(nv, list);
}

inline clawtree::RootedTree tree(std::size_t nv, std::initializer_list<clawtree::Edge> edges,
                                 clawtree::Vertex root = 0) {
  const std::vector<clawtree::Edge> list(edges);
  return clawtree::RootedTree::from_edges(nv, list, root);
}

inline clawtree::Graph star(std::size_t leaves) {
  std::vector<clawtree::Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<clawtree::Vertex>(i));
  return clawtree::Graph::from_edges(leaves + 1, edges);
}

inline std::vector<clawtree::Edge> edges(std::initializer_list<clawtree::Edge> list) { return list; }

}  // namespace testing
