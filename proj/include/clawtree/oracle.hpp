#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clawtree/graph.hpp"
#include "clawtree/instances.hpp"
#include "clawtree/solver.hpp"
#include "clawtree/tree.hpp"

namespace clawtree {

class OracleLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default work guard for the enumeration recursion.
inline constexpr std::uint64_t kEnumerationWorkLimit = std::uint64_t{1} << 24;

/// Visits every spanning tree (edge set, canonical order) exactly once by
/// contract-or-delete. Throws GraphError on a disconnected graph and
/// OracleLimit when the work guard is exceeded.
std::uint64_t enumerate_spanning_trees(const Graph& g,
                                       const std::function<void(std::span<const Edge>)>& visit,
                                       std::uint64_t work_limit = kEnumerationWorkLimit);

/// Matrix-Tree count with fraction-free elimination; exact, throws
/// OracleLimit if an intermediate overflows 128 bits.
std::uint64_t matrix_tree_count(const Graph& g);

struct OracleReport {
  std::uint64_t tree_count = 0;
  std::size_t min_leaf_plus_branch = 0;
  RootedTree min_leaf_plus_branch_tree;
  std::size_t min_branch = 0;
  RootedTree min_branch_tree;
};

/// One enumeration pass; witnesses are the first minimisers found, rooted at 0.
OracleReport oracle_report(const Graph& g, std::uint64_t work_limit = kEnumerationWorkLimit);

std::pair<std::size_t, RootedTree> min_leaf_plus_branch(const Graph& g);
std::pair<std::size_t, RootedTree> min_branch_count(const Graph& g);

/// All k-subsets; throws OracleLimit above 2^26 subsets.
SigmaValue sigma_bruteforce(const Graph& g, std::size_t k);

struct AuditRecord {
  std::string graph_id;
  std::size_t m = 0;
  std::size_t n = 0;
  bool hypothesis = false;
  std::size_t oracle_min = 0;
  std::string solver_status;  // tree | certificate | anomaly | error | skipped
  std::optional<std::size_t> solver_value;  // |L|+|B| of a Tree result
  std::string note;
};

struct AuditOptions {
  std::size_t n_max = 6;
  /// Also run forced solves where the hypothesis fails.
  bool forced = true;
  std::size_t jobs = 1;
};

struct AuditReport {
  std::vector<AuditRecord> records;
  /// Hypothesis satisfied but oracle min > n, or the solver did not return
  /// a tree within the bound.
  std::vector<AuditRecord> counterexamples;
  /// Any certificate emitted (forced runs) that failed verification or the
  /// independent sigma recomputation.
  std::vector<AuditRecord> bad_certificates;
  std::size_t certificates = 0;
  std::size_t skipped = 0;
};

AuditReport theorem_audit(std::span<const NamedGraph> corpus, const AuditOptions& opts = {});

}  // namespace clawtree
