#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "clawtree/graph.hpp"

namespace clawtree {

/// SplitMix64. state += 0x9E3779B97F4A7C15, then
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
/// bounded(n) is next() % n.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t bounded(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/// Center 0; leg i occupies vertices 1 + i*length .. (i+1)*length, outward.
Graph spider(std::size_t legs, std::size_t length);

/// Random parent attachment tree plus `extra` distinct non-tree edges.
Graph random_connected(std::size_t nv, std::size_t extra, std::uint64_t seed);

Graph cycle_graph(std::size_t nv);
Graph path_graph(std::size_t nv);
Graph complete_graph(std::size_t nv);

/// Triangle 0,1,2 with pendants 3,4,5 attached to 0,1,2.
Graph net_graph();
/// K_4 on 0..3 with pendants 4..7 attached to 0..3.
Graph four_net_graph();

struct GeneratorSpec {
  enum class Kind { line_of_random, line_of_spider, named, random_connected };
  Kind kind = Kind::named;
  std::string name;  // named graphs: c<k>, p<k>, k<k>, net, 4net
  std::size_t size = 0;  // vertex count, or spider legs
  std::size_t param = 0;  // extra edges, or spider length
  std::uint64_t seed = 0;

  /// Round trip with parse_spec, e.g. "random:8:3", "line-random:7:2", "line-spider:4:2", "named:net".
  std::string to_string() const;
  /// FNV-1a of to_string() plus the seed, hex.
  std::string hash() const;
};

/// Throws std::invalid_argument on unknown kinds or malformed parameters.
GeneratorSpec parse_spec(std::string_view text, std::uint64_t seed);
Graph generate(const GeneratorSpec& spec);

struct NamedGraph {
  std::string id;
  Graph graph;
};

/// Named graphs, line graphs of spiders, then line graphs of random graphs
/// until `random_count` of them pass the filter. Members are connected,
/// claw-free, have at most 12 vertices and at most `tree_cap` spanning trees.
std::vector<NamedGraph> claw_free_corpus(std::size_t random_count, std::uint64_t seed,
                                          std::uint64_t tree_cap = 65536);

}  // namespace clawtree
