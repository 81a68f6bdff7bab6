// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "clawtree/graph.hpp"
#include "clawtree/instances.hpp"
#include "clawtree/oblique.hpp"
#include "clawtree/oracle.hpp"
#include "clawtree/solver.hpp"
#include "clawtree/tree.hpp"

using namespace clawtree;

namespace {

constexpr std::uint64_t kCorpusSeed = 1;
constexpr std::size_t kRandomGraphs = 300;

struct Criterion {
  int id;
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    if (failures.size() < 5) failures.push_back(what);
    else if (failures.size() == 5) failures.push_back("...");
  }
  bool passed() const { return failures.empty(); }
};

std::size_t leaves_plus_branch(const RootedTree& t) {
  if (t.vertex_count() < 2) return t.vertex_count();
  const auto cls = classify(t);
  return cls.leaves.size() + cls.branch.size();
}

std::size_t branch_count(const RootedTree& t) {
  return t.vertex_count() < 2 ? 0 : classify(t).branch.size();
}

std::string where(const std::string& id, std::size_t m, std::size_t n) {
  return id + " m=" + std::to_string(m) + " n=" + std::to_string(n);
}

// Random spanning tree by Kruskal over a shuffled edge order.
RootedTree random_spanning_tree(const Graph& g, SplitMix64& rng) {
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.bounded(i)]);
  std::vector<Vertex> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<Edge> chosen;
  for (const Edge& e : edges) {
    const Vertex a = find(e.u), b = find(e.v);
    if (a == b) continue;
    parent[a] = b;
    chosen.push_back(e);
  }
  return RootedTree::from_edges(g.vertex_count(), chosen, static_cast<Vertex>(rng.bounded(g.vertex_count())));
}

// Independent recomputation of the certificate claim, outside the verifier.
void check_certificate(Criterion& c, const Graph& g, const Certificate& cert, std::size_t m, std::size_t n,
                       const std::string& ctx) {
  ++c.checked;
  const CertificateCheck verdict = verify_certificate(g, cert, m, n);
  if (verdict != CertificateCheck::ok) c.fail(ctx + ": " + std::string(to_string(verdict)));
  const std::int64_t bound = static_cast<std::int64_t>(g.vertex_count()) - static_cast<std::int64_t>(n) +
                             static_cast<std::int64_t>(m) - 2;
  if (cert.bound != bound) c.fail(ctx + ": bound " + std::to_string(cert.bound) + " != " + std::to_string(bound));
  const SigmaValue sigma = sigma_bruteforce(g, m + 1);
  if (sigma.is_infinite() || static_cast<std::int64_t>(*sigma.value) > bound)
    c.fail(ctx + ": sigma_" + std::to_string(m + 1) + " = " + to_string(sigma) + " > " + std::to_string(bound));
}

// Soundness and termination of one recorded run.
void check_trace(Criterion& c, const Graph& g, const SolveResult& res, const std::string& ctx) {
  const std::size_t nv = g.vertex_count();
  ++c.checked;
  if (res.status == SolveStatus::anomaly) c.fail(ctx + ": anomaly " + res.anomaly);
  if (res.stats.iterations > nv * nv * nv) c.fail(ctx + ": iterations exceed N^3");
  if (res.trace.size() != res.stats.iterations + 1) c.fail(ctx + ": trace length mismatch");
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    if (!spans(g, res.trace[i])) c.fail(ctx + ": step " + std::to_string(i) + " is not a spanning tree of G");
    if (i > 0 && !(potential(res.trace[i]) < potential(res.trace[i - 1])))
      c.fail(ctx + ": step " + std::to_string(i) + " does not decrease the potential");
  }
}

}  // namespace

int main() {
  const auto started = std::chrono::steady_clock::now();
  const std::vector<NamedGraph> corpus = claw_free_corpus(kRandomGraphs, kCorpusSeed);
  std::size_t random_members = 0;
  for (const NamedGraph& ng : corpus) random_members += ng.id.rfind("line-random:", 0) == 0;

  std::vector<Criterion> cr = {
      {1, "theorem suite: hypothesis => solve returns a tree with |L|+|B| <= n"},
      {2, "oracle concordance: hypothesis => oracle min <= n; solver value >= oracle min"},
      {3, "certificate soundness: verify_certificate and sigma_{m+1} <= |G|-n+m-2"},
      {4, "no false refutations under the hypothesis"},
      {5, "oblique degree equals graph degree"},
      {6, "leaf formula and |L| >= |B|+2 on every enumerated tree"},
      {7, "move soundness and termination"},
      {8, "branch mode: at most k branch vertices"},
      {9, "pruned sigma_k equals brute force for k <= 6"},
      {10, "known-instance fixtures"},
  };
  auto& c1 = cr[0];
  auto& c2 = cr[1];
  auto& c3 = cr[2];
  auto& c4 = cr[3];
  auto& c5 = cr[4];
  auto& c6 = cr[5];
  auto& c7 = cr[6];
  auto& c8 = cr[7];
  auto& c9 = cr[8];
  auto& c10 = cr[9];

  if (random_members < kRandomGraphs) c1.fail("corpus has only " + std::to_string(random_members) + " random line graphs");

  std::size_t tree_total = 0;
  SplitMix64 rng(0x5eed);

  for (const NamedGraph& ng : corpus) {
    const Graph& g = ng.graph;
    const std::size_t nv = g.vertex_count();

    // Exhaustive pass: minima and per-tree identities.
    std::size_t min_lb = nv, min_b = nv;
    enumerate_spanning_trees(g, [&](std::span<const Edge> edges) {
      std::vector<std::size_t> deg(nv, 0);
      for (const Edge& e : edges) ++deg[e.u], ++deg[e.v];
      long long leaves = 0, branch = 0, excess = 0;
      for (std::size_t d : deg) {
        leaves += d == 1;
        if (d >= 3) ++branch, excess += static_cast<long long>(d) - 2;
      }
      ++tree_total;
      ++c6.checked;
      if (nv >= 2 && leaves != 2 + excess) c6.fail(ng.id + ": leaf formula");
      if (nv >= 2 && leaves < branch + 2) c6.fail(ng.id + ": |L| < |B|+2");
      if (nv >= 2) {
        min_lb = std::min<std::size_t>(min_lb, static_cast<std::size_t>(leaves + branch));
        min_b = std::min<std::size_t>(min_b, static_cast<std::size_t>(branch));
      }
    });
    if (matrix_tree_count(g) != enumerate_spanning_trees(g, [](std::span<const Edge>) {}))
      c2.fail(ng.id + ": enumeration disagrees with the Matrix-Tree count");

    for (std::size_t k = 1; k <= 6; ++k) {
      ++c9.checked;
      if (sigma_k(g, k) != sigma_bruteforce(g, k)) c9.fail(ng.id + " k=" + std::to_string(k));
    }

    for (std::size_t n = 2; n <= 6; ++n) {
      for (std::size_t m = 1; m <= static_cast<std::size_t>(ceil_two_thirds(static_cast<std::int64_t>(n))); ++m) {
        const std::string ctx = where(ng.id, m, n);
        const HypothesisReport hyp = check_hypothesis(g, m, n);
        SolverConfig cfg;
        cfg.force = !hyp.satisfied;
        cfg.record_trace = true;
        SolveResult res;
        try {
          res = solve(g, m, n, cfg);
        } catch (const std::exception& e) {
          (hyp.satisfied ? c1 : c3).fail(ctx + ": " + e.what());
          continue;
        }
        check_trace(c7, g, res, ctx);
        if (res.certificate) check_certificate(c3, g, *res.certificate, m, n, ctx);
        if (res.tree) {
          ++c2.checked;
          if (leaves_plus_branch(*res.tree) < min_lb) c2.fail(ctx + ": solver beats the oracle");
        }
        if (!hyp.satisfied) continue;

        ++c1.checked;
        if (res.status != SolveStatus::tree || leaves_plus_branch(*res.tree) > n || !spans(g, *res.tree))
          c1.fail(ctx + ": status " + std::string(to_string(res.status)));
        ++c2.checked;
        if (min_lb > n) c2.fail(ctx + ": oracle min " + std::to_string(min_lb) + " > n");
        ++c4.checked;
        if (res.status != SolveStatus::tree) c4.fail(ctx + ": " + std::string(to_string(res.status)));
      }
    }

    // Other starting trees: random spanning trees and depth-first trees from every vertex.
    for (std::size_t trial = 0; trial < nv + 4; ++trial) {
      const std::size_t n = 2 + trial % 5;
      const std::size_t m = 1 + trial % static_cast<std::size_t>(ceil_two_thirds(static_cast<std::int64_t>(n)));
      const std::string ctx = where(ng.id, m, n) + " start " + std::to_string(trial);
      SolverConfig cfg;
      cfg.record_trace = true;
      cfg.force = true;
      cfg.initial_tree = trial < 4 ? random_spanning_tree(g, rng) : dfs_spanning_tree(g, static_cast<Vertex>(trial - 4));
      const bool hyp = check_hypothesis(g, m, n).satisfied;
      const SolveResult res = solve(g, m, n, cfg);
      check_trace(c7, g, res, ctx);
      if (res.certificate) check_certificate(c3, g, *res.certificate, m, n, ctx);
      if (hyp) {
        ++c4.checked;
        if (res.status != SolveStatus::tree) c4.fail(ctx + ": " + std::string(to_string(res.status)));
      }
    }

    for (std::size_t k = 1; k <= 2; ++k) {
      if (!check_hypothesis(g, k + 3, 2 * k + 3).satisfied) continue;
      const std::string ctx = ng.id + " k=" + std::to_string(k);
      ++c8.checked;
      try {
        const SolveResult res = solve_branch_mode(g, k);
        if (res.status != SolveStatus::tree) {
          c8.fail(ctx + ": " + std::string(to_string(res.status)));
          continue;
        }
        const std::size_t b = branch_count(*res.tree);
        if (b > k) c8.fail(ctx + ": " + std::to_string(b) + " branch vertices");
        if (min_b > k || min_b > b) c8.fail(ctx + ": oracle min branch " + std::to_string(min_b));
      } catch (const std::exception& e) {
        c8.fail(ctx + ": " + e.what());
      }
    }

    // Oblique degree on the corpus graph with a random tree.
    const RootedTree t = random_spanning_tree(g, rng);
    ++c5.checked;
    for (Vertex v = 0; v < nv; ++v)
      if (oblique_degree(g, t, v) != g.degree(v)) c5.fail(ng.id + " v=" + std::to_string(v));
  }

  // Oblique degree on arbitrary (not necessarily claw-free) random graphs.
  for (std::size_t i = 0; i < 1200; ++i) {
    const std::size_t nv = 2 + rng.bounded(14);
    const std::size_t max_extra = nv * (nv - 1) / 2 - (nv - 1);
    const Graph g = random_connected(nv, rng.bounded(max_extra + 1), rng.next());
    const RootedTree t = random_spanning_tree(g, rng);
    ++c5.checked;
    for (Vertex v = 0; v < nv; ++v)
      if (oblique_degree(g, t, v) != g.degree(v)) c5.fail("random graph " + std::to_string(i));
  }
  if (c5.checked < 1000) c5.fail("fewer than 1000 pairs");
  if (tree_total < 10000) c6.fail("only " + std::to_string(tree_total) + " trees enumerated");

  // Fixtures.
  auto fixture = [&](const std::string& what, std::size_t got, std::size_t want) {
    ++c10.checked;
    if (got != want) c10.fail(what + " = " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  const OracleReport net = oracle_report(net_graph());
  const OracleReport four = oracle_report(four_net_graph());
  fixture("net min L+B", net.min_leaf_plus_branch, 4);
  fixture("net min B", net.min_branch, 1);
  ++c10.checked;
  if (sigma_k(net_graph(), 2) != SigmaValue::finite(2) || sigma_bruteforce(net_graph(), 2) != SigmaValue::finite(2))
    c10.fail("net sigma_2 != 2");
  fixture("4-net min L+B", four.min_leaf_plus_branch, 5);
  fixture("4-net min B", four.min_branch, 1);
  fixture("C6 min L+B", min_leaf_plus_branch(cycle_graph(6)).first, 2);

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (seconds > 300) c1.fail("runtime " + std::to_string(seconds) + " s exceeds 5 minutes");

  int failed = 0;
  for (const Criterion& c : cr) {
    std::printf("%s criterion %d: %s (%zu checks)\n", c.passed() ? "PASS" : "FAIL", c.id, c.name.c_str(), c.checked);
    for (const std::string& f : c.failures) std::printf("    %s\n", f.c_str());
    if (!c.passed()) ++failed;
  }
  std::printf("corpus %zu graphs (%zu random line graphs), %zu spanning trees enumerated, %.1f s\n", corpus.size(),
              random_members, tree_total, seconds);
  return failed;
}
