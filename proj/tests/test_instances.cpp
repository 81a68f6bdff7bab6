#include <doctest.h>

#include "clawtree/instances.hpp"
#include "clawtree/oracle.hpp"
#include "support.hpp"

using namespace clawtree;

TEST_CASE("SplitMix64 reference values") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.bounded(7) == b.bounded(7));
}

TEST_CASE("spider") {
  CHECK(spider(3, 1) == testing::star(3));
  const Graph s = spider(3, 2);
  CHECK(s.vertex_count() == 7);
  CHECK(s.edge_count() == 6);
  CHECK(s.degree(0) == 3);
  CHECK(line_graph(spider(4, 2)).vertex_count() == 8);
  CHECK(line_graph(spider(4, 2)).edge_count() == 10);
  CHECK(oracle_report(line_graph(spider(4, 2))).min_leaf_plus_branch == 5);
  CHECK_THROWS_AS(spider(2, 1), std::invalid_argument);
}

TEST_CASE("random_connected") {
  const Graph t = random_connected(5, 0, 11);
  CHECK(t.edge_count() == 4);
  CHECK(is_connected(t));
  CHECK(random_connected(5, 6, 3) == complete_graph(5));
  CHECK(random_connected(9, 5, 77) == random_connected(9, 5, 77));
  CHECK_FALSE(random_connected(9, 5, 77) == random_connected(9, 5, 78));
  CHECK_THROWS_AS(random_connected(5, 7, 1), std::invalid_argument);
}

TEST_CASE("generator specs") {
  const GeneratorSpec s = parse_spec("line-random:7:2", 5);
  CHECK(s.kind == GeneratorSpec::Kind::line_of_random);
  CHECK(s.to_string() == "line-random:7:2");
  CHECK(parse_spec(s.to_string(), 5).hash() == s.hash());
  CHECK(parse_spec(s.to_string(), 6).hash() != s.hash());
  CHECK(s.hash().size() == 16);
  CHECK(generate(s) == line_graph(random_connected(7, 2, 5)));
  CHECK(generate(parse_spec("named:net", 0)) == net_graph());
  CHECK(generate(parse_spec("named:k4", 0)) == complete_graph(4));
  CHECK(generate(parse_spec("line-spider:3:2", 0)) == line_graph(spider(3, 2)));
  CHECK_THROWS_AS(parse_spec("named:zz", 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("random:7", 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("weird:1:2", 0), std::invalid_argument);
}

TEST_CASE("claw_free_corpus") {
  const auto small = claw_free_corpus(0, 1);
  CHECK(small.size() >= 6);
  CHECK(small[0].id == "c5");
  const auto corpus = claw_free_corpus(50, 1);
  for (const NamedGraph& ng : corpus) {
    INFO(ng.id);
    CHECK(is_connected(ng.graph));
    CHECK_FALSE(claw_witness(ng.graph));
    CHECK(ng.graph.vertex_count() <= 12);
  }
  const auto again = claw_free_corpus(50, 1);
  REQUIRE(again.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(again[i].id == corpus[i].id);
    CHECK(again[i].graph == corpus[i].graph);
  }
}
