#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clawtree/graph.hpp"
#include "clawtree/tree.hpp"

namespace clawtree {

// Local search over spanning trees of a connected claw-free graph. Each
// step finds a tree configuration that an extremal tree cannot have and
// applies the edge swap that rules it out, lowering the PotentialKey. When
// no such configuration remains and the tree still has more than n leaves
// plus branch vertices, the counting argument yields an independent set of
// m+1 vertices with degree sum at most |G|-n+m-2: a certificate that the
// degree-sum hypothesis fails.
//
// Two regimes, chosen by the current tree:
//   - no branch vertex of degree 3: leaf-set rules (claim2..claim4, ab-disjoint)
//   - otherwise, rooted at a degree-3 branch vertex r, with
//     H = leaves + degree-3 branch vertices - {r}: claim5..claim10, cde-disjoint

enum class ClaimTag {
  claim2,
  claim3,
  claim4,
  claim5,
  claim6,
  claim7,
  claim8,
  claim9,
  claim10,
  ab_disjoint,
  cde_disjoint,
};

std::string_view to_string(ClaimTag tag);

struct Violation {
  ClaimTag claim = ClaimTag::claim2;
  /// Accepted repair (normalised).
  Move move;
  /// The move is a generic exchange, not one of the claim's repairs.
  bool fallback = false;
  /// Vertices and edge the guard fired on, for audit.
  std::vector<Vertex> context;
  std::optional<Edge> context_edge;
  /// Tree after the move, rooted by canonical_root.
  RootedTree result;
};

/// A guard fired but none of its repairs lowered the potential, or a
/// certificate failed its own invariants.
class SolverAnomaly : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CertificateMode { case1, case2 };

struct Certificate {
  CertificateMode mode = CertificateMode::case1;
  /// Q (case1) or M (case2): m+1 vertices, ascending.
  std::vector<Vertex> witness;
  Vertex root = 0;
  /// Every tree edge with no oblique neighbour in the witness.
  std::vector<Edge> edges_no_oblique;
  std::size_t count = 0;
  std::uint64_t degree_sum = 0;
  std::int64_t bound = 0;  // |G| - n + m - 2
  RootedTree fixpoint_tree;
  /// Materialised A, B (case1) or C, D, E (case2) edge sets.
  std::map<std::string, std::vector<Edge>> parts;
};

std::string_view to_string(CertificateMode mode);

enum class CertificateCheck {
  ok,
  tree_invalid,
  wrong_size,
  vertex_out_of_range,
  duplicate_vertex,
  not_independent,
  not_pseudoindependent,
  witness_role,
  edge_not_in_tree,
  edge_has_oblique_neighbor,
  count_mismatch,
  count_too_small,
  degree_sum_mismatch,
  bound_mismatch,
  bound_exceeded,
};

std::string_view to_string(CertificateCheck check);

enum class SolveStatus { tree, certificate, anomaly };

std::string_view to_string(SolveStatus status);

struct SolveStats {
  std::size_t iterations = 0;
  std::map<std::string, std::size_t> moves;
};

struct SolveResult {
  SolveStatus status = SolveStatus::anomaly;
  std::optional<RootedTree> tree;
  std::optional<Certificate> certificate;
  std::string anomaly;
  SolveStats stats;
  /// Every tree visited, starting tree first (only with record_trace).
  std::vector<RootedTree> trace;
};

struct SolverConfig {
  /// Run even when the degree-sum condition fails.
  bool force = false;
  /// Root of the initial depth-first tree.
  Vertex start_root = 0;
  /// Start from this tree instead of a depth-first tree.
  std::optional<RootedTree> initial_tree;
  /// Defaults to N^3.
  std::optional<std::size_t> iteration_cap;
  bool record_trace = false;
  /// When a guard fires and none of its repairs lowers the potential, take
  /// the first single edge exchange that does instead of reporting an
  /// anomaly. Counted under "fallback" in SolveStats::moves.
  bool exchange_fallback = false;
};

enum class SolveErrorKind { disconnected, not_claw_free, parameter_range, hypothesis_unsatisfied };

std::string_view to_string(SolveErrorKind kind);

class SolveError : public std::runtime_error {
 public:
  SolveError(SolveErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  SolveErrorKind kind() const { return kind_; }

  std::optional<ClawWitness> claw;
  std::optional<HypothesisReport> report;

 private:
  SolveErrorKind kind_;
};

/// First violated guard in scan order, with its repair. Returns nullopt when
/// every guard holds. Throws SolverAnomaly when a guard fires and no
/// prescribed repair strictly lowers the potential. The tree is re-rooted
/// with canonical_root first if needed.
std::optional<Violation> find_violation(const Graph& g, const RootedTree& t, std::size_t m,
                                        std::size_t n, bool exchange_fallback = false);

/// Builds the refutation certificate on a tree where find_violation found
/// nothing. Throws std::invalid_argument when |L|+|B| <= n, SolverAnomaly
/// when the certificate does not verify.
Certificate build_certificate(const Graph& g, const RootedTree& t, std::size_t m, std::size_t n);

/// Recomputes every certificate claim from g alone. `ok` implies
/// sigma_{m+1}(g) <= |G|-n+m-2.
CertificateCheck verify_certificate(const Graph& g, const Certificate& cert, std::size_t m,
                                    std::size_t n);

/// Throws SolveError for disconnected or clawed inputs, m < 1, n < 2,
/// m > ceil(2n/3), or (without cfg.force) a failed degree-sum condition.
SolveResult solve(const Graph& g, std::size_t m, std::size_t n, const SolverConfig& cfg = {});

/// At most k branch vertices: solve with n = 2k+3 and m = k+3.
SolveResult solve_branch_mode(const Graph& g, std::size_t k, const SolverConfig& cfg = {});

}  // namespace clawtree
