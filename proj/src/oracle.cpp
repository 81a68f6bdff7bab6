#include "clawtree/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace clawtree {

namespace {

/// Union-find with rollback: union by size, no path compression.
class UndoDsu {
 public:
  explicit UndoDsu(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  Vertex find(Vertex v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const Vertex b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
  std::vector<Vertex> history_;
};

class Enumerator {
 public:
  Enumerator(const Graph& g, const std::function<void(std::span<const Edge>)>& visit, std::uint64_t limit)
      : g_(g), edges_(g.edges()), visit_(visit), limit_(limit), dsu_(g.vertex_count()) {}

  std::uint64_t run() {
    if (g_.vertex_count() == 1) {
      visit_({});
      return 1;
    }
    recurse(0);
    return count_;
  }

 private:
  /// Chosen edges plus edges[from..] still connect the graph.
  bool still_connected(std::size_t from) const {
    UndoDsu probe = dsu_;
    std::size_t joined = chosen_.size();
    for (std::size_t i = from; i < edges_.size() && joined + 1 < g_.vertex_count(); ++i)
      if (probe.unite(edges_[i].u, edges_[i].v)) ++joined;
    return joined + 1 == g_.vertex_count();
  }

  void recurse(std::size_t i) {
    if (++work_ > limit_) throw OracleLimit("spanning tree enumeration exceeded its work limit");
    if (chosen_.size() + 1 == g_.vertex_count()) {
      ++count_;
      visit_(chosen_);
      return;
    }
    // Invariant: chosen + edges[i..] connect the graph, so i is in range.
    const Edge e = edges_[i];
    if (dsu_.find(e.u) == dsu_.find(e.v)) {
      recurse(i + 1);
      return;
    }
    dsu_.unite(e.u, e.v);
    chosen_.push_back(e);
    recurse(i + 1);
    chosen_.pop_back();
    dsu_.undo();
    if (still_connected(i + 1)) recurse(i + 1);
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  const std::function<void(std::span<const Edge>)>& visit_;
  std::uint64_t limit_;
  std::uint64_t work_ = 0;
  std::uint64_t count_ = 0;
  UndoDsu dsu_;
  std::vector<Edge> chosen_;
};

__extension__ using i128 = __int128;

i128 checked_mul(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw OracleLimit("matrix-tree determinant overflow");
  return out;
}

i128 checked_sub(i128 a, i128 b) {
  i128 out;
  if (__builtin_sub_overflow(a, b, &out)) throw OracleLimit("matrix-tree determinant overflow");
  return out;
}

std::pair<std::size_t, std::size_t> leaf_branch_counts(std::span<const Edge> edges, std::vector<std::size_t>& deg) {
  std::fill(deg.begin(), deg.end(), 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::size_t leaves = 0, branch = 0;
  for (std::size_t d : deg) {
    leaves += d == 1;
    branch += d >= 3;
  }
  return {leaves, branch};
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::uint64_t{1} << 40)) return r;
  }
  return r;
}

}  // namespace

std::uint64_t enumerate_spanning_trees(const Graph& g, const std::function<void(std::span<const Edge>)>& visit,
                                       std::uint64_t work_limit) {
  if (g.vertex_count() == 0 || !is_connected(g)) throw GraphError("spanning tree enumeration needs a connected graph");
  return Enumerator(g, visit, work_limit).run();
}

std::uint64_t matrix_tree_count(const Graph& g) {
  const std::size_t nv = g.vertex_count();
  if (nv == 0) return 0;
  if (nv == 1) return 1;
  // Laplacian with the last row and column dropped.
  const std::size_t d = nv - 1;
  std::vector<std::vector<i128>> a(d, std::vector<i128>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    a[i][i] = static_cast<i128>(g.degree(static_cast<Vertex>(i)));
    for (Vertex j : g.neighbors(static_cast<Vertex>(i)))
      if (j < d) a[i][j] = -1;
  }
  // Bareiss: every division is exact.
  i128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < d && a[p][k] == 0) ++p;
      if (p == d) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j)
        a[i][j] = checked_sub(checked_mul(a[i][j], a[k][k]), checked_mul(a[i][k], a[k][j])) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  const i128 det = sign * a[d - 1][d - 1];
  if (det < 0 || det > static_cast<i128>(UINT64_MAX)) throw OracleLimit("matrix-tree count out of range");
  return static_cast<std::uint64_t>(det);
}

OracleReport oracle_report(const Graph& g, std::uint64_t work_limit) {
  OracleReport report;
  const std::size_t nv = g.vertex_count();
  std::vector<std::size_t> deg(nv);
  std::vector<Edge> best_lb, best_b;
  std::size_t min_lb = SIZE_MAX, min_b = SIZE_MAX;
  report.tree_count = enumerate_spanning_trees(
      g,
      [&](std::span<const Edge> edges) {
        auto [leaves, branch] = leaf_branch_counts(edges, deg);
        if (leaves + branch < min_lb) {
          min_lb = leaves + branch;
          best_lb.assign(edges.begin(), edges.end());
        }
        if (branch < min_b) {
          min_b = branch;
          best_b.assign(edges.begin(), edges.end());
        }
      },
      work_limit);
  report.min_leaf_plus_branch = min_lb;
  report.min_branch = min_b;
  report.min_leaf_plus_branch_tree = RootedTree::from_edges(nv, best_lb, 0);
  report.min_branch_tree = RootedTree::from_edges(nv, best_b, 0);
  return report;
}

std::pair<std::size_t, RootedTree> min_leaf_plus_branch(const Graph& g) {
  OracleReport r = oracle_report(g);
  return {r.min_leaf_plus_branch, std::move(r.min_leaf_plus_branch_tree)};
}

std::pair<std::size_t, RootedTree> min_branch_count(const Graph& g) {
  OracleReport r = oracle_report(g);
  return {r.min_branch, std::move(r.min_branch_tree)};
}

SigmaValue sigma_bruteforce(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("sigma_k needs k >= 1");
  const std::size_t nv = g.vertex_count();
  if (k > nv) return SigmaValue::infinity();
  if (binomial(nv, k) > (std::uint64_t{1} << 26)) throw OracleLimit("too many subsets for brute-force sigma");
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::optional<std::uint64_t> best;
  while (true) {
    bool independent = true;
    for (std::size_t a = 0; a < k && independent; ++a)
      for (std::size_t b = a + 1; b < k && independent; ++b)
        if (g.adjacent(static_cast<Vertex>(idx[a]), static_cast<Vertex>(idx[b]))) independent = false;
    if (independent) {
      std::uint64_t sum = 0;
      for (std::size_t v : idx) sum += g.degree(static_cast<Vertex>(v));
      if (!best || sum < *best) best = sum;
    }
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == nv - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best ? SigmaValue::finite(*best) : SigmaValue::infinity();
}

namespace {

struct GraphAudit {
  std::vector<AuditRecord> records;
  std::vector<AuditRecord> counterexamples;
  std::vector<AuditRecord> bad_certificates;
  std::size_t certificates = 0;
  std::size_t skipped = 0;
};

GraphAudit audit_graph(const NamedGraph& entry, const AuditOptions& opts) {
  GraphAudit out;
  const Graph& g = entry.graph;
  AuditRecord base;
  base.graph_id = entry.id;
  if (g.vertex_count() == 0 || !is_connected(g)) {
    base.solver_status = "skipped";
    base.note = "disconnected";
    out.records.push_back(base);
    ++out.skipped;
    return out;
  }
  if (claw_witness(g)) {
    base.solver_status = "skipped";
    base.note = "not claw-free";
    out.records.push_back(base);
    ++out.skipped;
    return out;
  }
  const OracleReport oracle = oracle_report(g);
  for (std::size_t n = 2; n <= opts.n_max; ++n) {
    const auto m_max = static_cast<std::size_t>(ceil_two_thirds(static_cast<std::int64_t>(n)));
    for (std::size_t m = 1; m <= m_max; ++m) {
      AuditRecord rec = base;
      rec.m = m;
      rec.n = n;
      rec.oracle_min = oracle.min_leaf_plus_branch;
      rec.hypothesis = check_hypothesis(g, m, n).satisfied;
      if (!rec.hypothesis && !opts.forced) {
        rec.solver_status = "skipped";
        out.records.push_back(rec);
        continue;
      }
      SolverConfig cfg;
      cfg.force = !rec.hypothesis;
      try {
        SolveResult res = solve(g, m, n, cfg);
        rec.solver_status = std::string(to_string(res.status));
        if (res.status == SolveStatus::tree) {
          const TreeClassification cls = classify(*res.tree);
          rec.solver_value = cls.leaves.size() + cls.branch.size();
        } else if (res.status == SolveStatus::certificate) {
          ++out.certificates;
          const CertificateCheck check = verify_certificate(g, *res.certificate, m, n);
          const SigmaValue sigma = sigma_bruteforce(g, m + 1);
          const bool sigma_ok = sigma.value && static_cast<std::int64_t>(*sigma.value) <= res.certificate->bound;
          if (check != CertificateCheck::ok || !sigma_ok) {
            rec.note = "certificate check " + std::string(to_string(check)) + ", sigma " + to_string(sigma);
            out.bad_certificates.push_back(rec);
          }
        } else {
          rec.note = res.anomaly;
        }
      } catch (const SolveError& err) {
        rec.solver_status = "error";
        rec.note = err.what();
      }
      const bool theorem_ok = oracle.min_leaf_plus_branch <= n;
      const bool solver_ok = rec.solver_status == "tree" && rec.solver_value && *rec.solver_value <= n &&
                             *rec.solver_value >= oracle.min_leaf_plus_branch;
      if (rec.hypothesis && (!theorem_ok || !solver_ok)) out.counterexamples.push_back(rec);
      out.records.push_back(rec);
    }
  }
  return out;
}

}  // namespace

AuditReport theorem_audit(std::span<const NamedGraph> corpus, const AuditOptions& opts) {
  std::vector<GraphAudit> parts(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        parts[i] = audit_graph(corpus[i], opts);
      } catch (const std::exception& err) {
        AuditRecord rec;
        rec.graph_id = corpus[i].id;
        rec.solver_status = "error";
        rec.note = err.what();
        parts[i].records.push_back(rec);
        parts[i].counterexamples.push_back(rec);
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opts.jobs, corpus.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  AuditReport report;
  for (GraphAudit& p : parts) {
    auto move_all = [](std::vector<AuditRecord>& dst, std::vector<AuditRecord>& src) {
      dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
    };
    move_all(report.records, p.records);
    move_all(report.counterexamples, p.counterexamples);
    move_all(report.bad_certificates, p.bad_certificates);
    report.certificates += p.certificates;
    report.skipped += p.skipped;
  }
  return report;
}

}  // namespace clawtree
