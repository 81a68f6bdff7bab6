#include <doctest.h>

#include <set>

#include "clawtree/instances.hpp"
#include "clawtree/oracle.hpp"
#include "support.hpp"

using namespace clawtree;

TEST_CASE("enumerate_spanning_trees counts") {
  auto count = [](const Graph& g) { return enumerate_spanning_trees(g, [](std::span<const Edge>) {}); };
  CHECK(count(cycle_graph(4)) == 4);
  CHECK(count(cycle_graph(5)) == 5);
  CHECK(count(complete_graph(4)) == 16);
  CHECK(count(complete_graph(5)) == 125);
  CHECK(count(path_graph(6)) == 1);
  CHECK(count(testing::graph(1, {})) == 1);
  CHECK_THROWS_AS(count(testing::graph(4, {{0, 1}, {2, 3}})), GraphError);
  CHECK_THROWS_AS(enumerate_spanning_trees(complete_graph(8), [](std::span<const Edge>) {}, 1000), OracleLimit);
}

TEST_CASE("enumeration visits distinct spanning trees") {
  const Graph g = four_net_graph();
  std::set<std::vector<Edge>> seen;
  enumerate_spanning_trees(g, [&](std::span<const Edge> edges) {
    std::vector<Edge> list(edges.begin(), edges.end());
    CHECK(list.size() == g.vertex_count() - 1);
    CHECK_NOTHROW(RootedTree::from_edges(g.vertex_count(), list, 0));
    CHECK(seen.insert(list).second);
  });
  CHECK(seen.size() == 16);
}

TEST_CASE("matrix_tree_count agrees with enumeration") {
  CHECK(matrix_tree_count(complete_graph(6)) == 1296);
  CHECK(matrix_tree_count(cycle_graph(9)) == 9);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_connected(8, seed % 10, seed);
    CHECK(matrix_tree_count(g) == enumerate_spanning_trees(g, [](std::span<const Edge>) {}));
  }
}

TEST_CASE("minima") {
  CHECK(min_leaf_plus_branch(cycle_graph(6)).first == 2);
  CHECK(min_leaf_plus_branch(net_graph()).first == 4);
  CHECK(min_leaf_plus_branch(four_net_graph()).first == 5);
  CHECK(min_branch_count(path_graph(5)).first == 0);
  CHECK(min_branch_count(net_graph()).first == 1);
  CHECK(min_branch_count(four_net_graph()).first == 1);

  const OracleReport r = oracle_report(net_graph());
  CHECK(r.tree_count == 3);
  CHECK(spans(net_graph(), r.min_leaf_plus_branch_tree));
  const auto cls = classify(r.min_leaf_plus_branch_tree);
  CHECK(cls.leaves.size() + cls.branch.size() == r.min_leaf_plus_branch);
  CHECK(classify(r.min_branch_tree).branch.size() == r.min_branch);
}

TEST_CASE("sigma_bruteforce") {
  CHECK(sigma_bruteforce(cycle_graph(5), 2) == SigmaValue::finite(4));
  CHECK(sigma_bruteforce(complete_graph(4), 2).is_infinite());
  CHECK(sigma_bruteforce(net_graph(), 3) == SigmaValue::finite(3));
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_connected(10, seed % 12, seed);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(sigma_bruteforce(g, k) == sigma_k(g, k));
  }
}

TEST_CASE("theorem_audit") {
  std::vector<NamedGraph> corpus = {{"c5", cycle_graph(5)},  {"c6", cycle_graph(6)},
                                    {"k4", complete_graph(4)}, {"k5", complete_graph(5)},
                                    {"net", net_graph()},      {"4net", four_net_graph()}};
  const AuditReport report = theorem_audit(corpus);
  CHECK(report.counterexamples.empty());
  CHECK(report.bad_certificates.empty());
  CHECK(report.skipped == 0);
  CHECK_FALSE(report.records.empty());
  for (const AuditRecord& r : report.records)
    if (r.hypothesis) CHECK(r.oracle_min <= r.n);

  const AuditReport clawed = theorem_audit(std::vector<NamedGraph>{{"claw", testing::star(3)}});
  CHECK(clawed.counterexamples.empty());
  REQUIRE(clawed.records.size() == 1);
  CHECK(clawed.records[0].solver_status == "skipped");
  CHECK(clawed.records[0].note == "not claw-free");

  const AuditReport p2 = theorem_audit(std::vector<NamedGraph>{{"p2", path_graph(2)}});
  CHECK(p2.counterexamples.empty());

  AuditOptions parallel;
  parallel.jobs = 4;
  const AuditReport again = theorem_audit(corpus, parallel);
  REQUIRE(again.records.size() == report.records.size());
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    CHECK(again.records[i].graph_id == report.records[i].graph_id);
    CHECK(again.records[i].solver_status == report.records[i].solver_status);
  }
}
