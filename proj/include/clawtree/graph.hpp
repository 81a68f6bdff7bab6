#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clawtree {

using Vertex = std::uint32_t;

/// Unordered vertex pair, always stored with the smaller id first.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph over dense ids 0..N-1.
class Graph {
 public:
  /// The adjacency matrix is dense; this keeps it under 64 MiB.
  static constexpr std::size_t kMaxVertices = 8192;

  Graph() = default;

  /// Throws GraphError on self-loops, duplicates or out-of-range ids.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex a, Vertex b) const {
    return matrix_[static_cast<std::size_t>(a) * vertex_count() + b] != 0;
  }
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  /// All edges in canonical (sorted) order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint8_t> matrix_;
  std::size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Edge-list text format

enum class ParseErrorKind {
  malformed,
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  edge_count_mismatch,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  /// 1-based line number of the offending line (0 when the document is empty).
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Parses "N M" followed by M lines "u v". Lines starting with '#' are comments.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Writes the canonical edge-list document; parse_graph(write_graph(g)) == g.
std::string write_graph(const Graph& g);

// ---------------------------------------------------------------------------
// Graph-level predicates

struct ClawWitness {
  Vertex center = 0;
  Vertex leaves[3] = {0, 0, 0};
};

/// First induced K_{1,3} in (center, leaf triple) lexicographic order, if any.
std::optional<ClawWitness> claw_witness(const Graph& g);

/// sigma_k value: a degree sum, or +infinity when alpha(G) < k.
struct SigmaValue {
  std::optional<std::uint64_t> value;

  static SigmaValue infinity() { return {}; }
  static SigmaValue finite(std::uint64_t v) { return {v}; }

  bool is_infinite() const { return !value.has_value(); }
  /// sigma >= threshold, with infinity dominating every integer.
  bool at_least(std::int64_t threshold) const {
    return is_infinite() || threshold <= 0 ||
           *value >= static_cast<std::uint64_t>(threshold);
  }
  bool operator==(const SigmaValue&) const = default;
};

std::string to_string(const SigmaValue& s);

/// Exact sigma_k by depth-first enumeration of independent sets with
/// degree-sum pruning. Throws std::invalid_argument when k == 0.
SigmaValue sigma_k(const Graph& g, std::size_t k);

bool is_connected(const Graph& g);

/// Vertices of the result are the edges of g in canonical order.
/// Throws GraphError when g has no edges.
Graph line_graph(const Graph& g);

/// (2n+2) div 3 == ceil(2n/3).
inline std::int64_t ceil_two_thirds(std::int64_t n) { return (2 * n + 2) / 3; }

struct HypothesisReport {
  bool connected = false;
  bool claw_free = false;
  std::optional<ClawWitness> claw;
  std::size_t m = 0;
  std::size_t n = 0;
  bool m_constraint_ok = false;
  SigmaValue sigma_value;  // sigma_{m+1}
  std::int64_t threshold = 0;  // |G| - n + m - 1
  bool satisfied = false;
};

/// Evaluates every hypothesis of the leaves-plus-branch theorem for (m, n).
HypothesisReport check_hypothesis(const Graph& g, std::size_t m, std::size_t n);

}  // namespace clawtree
