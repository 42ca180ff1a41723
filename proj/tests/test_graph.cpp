#include "doctest.h"

#include <algorithm>

#include "semigraph/graph.hpp"

using namespace semigraph;

namespace {

Graph path(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return make_graph(std::move(labels), edges);
}

}  // namespace

TEST_CASE("hand-built graphs keep symmetric adjacency") {
  const Graph g = make_graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(g.size() == 4);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(!g.adjacent(0, 3));
  CHECK(!g.adjacent(2, 2));
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("total graph of a single table") {
  // T3 has zero divisors {0, a}; 0+a = a is again one, so the restricted
  // graph is a single edge.
  const Graph g1 = build_total_graph(catalog("T3"));
  CHECK(g1.size() == 2);
  CHECK(g1.labels == std::vector<std::string>{"0", "a"});
  CHECK(g1.adjacent(0, 1));

  const Graph g = build_total_graph(catalog("T3"), false);
  CHECK(g.size() == 3);
  CHECK(g.adjacent(0, 2));
  CHECK(!g.adjacent(0, 1));  // 0+1 = 1 is a unit
  CHECK(!g.adjacent(1, 2));  // 1+a = 1
  CHECK(g.degree(1) == 0);
}

TEST_CASE("total graph of a product agrees with direct evaluation") {
  const ProductSemiring p = direct_product({catalog("BOOL"), catalog("T3")});
  const Graph g = build_total_graph(p, false);
  REQUIRE(g.size() == 6);
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v) {
      const bool expect = u != v && p.is_zero_divisor(p.add(g.elements[u], g.elements[v]));
      CHECK(g.adjacent(u, v) == expect);
    }

  const Graph r = build_total_graph(p);
  CHECK(r.size() == 5);
  for (const Element& e : r.elements) CHECK(p.is_zero_divisor(e));
}

TEST_CASE("restricted vertices arrive in ascending tuple order") {
  const ProductSemiring p = direct_product({catalog("BOOL"), catalog("BOOL")});
  const Graph g = build_total_graph(p);
  REQUIRE(g.size() == 3);
  CHECK(g.elements == std::vector<Element>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(g.labels == std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)"});
  CHECK(g.index_of({1, 0}) == 2);
  CHECK(g.index_of({1, 1}) == -1);

  // The two nonzero divisors sum to the unit (1,1), so they are not adjacent:
  // the restriction of this product is a path, not a clique.
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(0, 2));
  CHECK(!g.adjacent(1, 2));
}

TEST_CASE("inadmissible input is rejected at the graph gate") {
  SemiringTable z2;
  z2.order = 2;
  z2.add = {{0, 1}, {1, 0}};
  z2.mul = {{0, 0}, {0, 1}};
  CHECK_THROWS_AS(build_total_graph(z2), HypothesisError);

  // BOOL x BOOL materialized fails closure as a plain table, so the table
  // gate refuses what the factored gate accepts.
  const MaterializedProduct m = materialize(direct_product({catalog("BOOL"), catalog("BOOL")}));
  CHECK_THROWS_AS(build_total_graph(m.table), HypothesisError);
  CHECK_NOTHROW(build_total_graph(direct_product({catalog("BOOL"), catalog("BOOL")})));
}

TEST_CASE("graph caps are enforced") {
  std::vector<SemiringTable> fs(13, catalog("BOOL"));  // 2^13 elements
  const ProductSemiring p = direct_product(fs);
  CHECK_THROWS_AS(build_total_graph(p, false), CapError);
  CHECK_THROWS_AS(build_total_graph(p, true, 100), CapError);
}

TEST_CASE("distances and diameter via repeated BFS") {
  const Graph g = path(5);
  const DistanceMatrix dm = distances(g);
  CHECK(dm.at(0, 4) == 4);
  CHECK(dm.at(4, 0) == 4);
  CHECK(dm.at(2, 2) == 0);
  CHECK(dm.at(1, 3) == 2);
  CHECK(diameter(dm) == 4);
  CHECK(diameter(g) == 4);
}

TEST_CASE("unreachable pairs are marked, not counted") {
  Graph g = make_graph({"a", "b", "c"}, {{0, 1}});
  const DistanceMatrix dm = distances(g);
  CHECK(dm.at(0, 2) == kUnreachable);
  CHECK(dm.at(2, 0) == kUnreachable);
  CHECK(dm.at(0, 1) == 1);
  CHECK(diameter(dm) == kUnreachable);
}

TEST_CASE("distance computation is thread-count invariant") {
  const ProductSemiring p = direct_product(
      {catalog("T3"), catalog("T3"), catalog("BXMODX2")});
  const Graph g = build_total_graph(p);
  const DistanceMatrix a = distances(g, 1);
  const DistanceMatrix b = distances(g, 4);
  CHECK(a.d == b.d);
}

TEST_CASE("twin classes split into open and closed kinds") {
  // Star: the three leaves share N(leaf) = {center}, an open class.
  const Graph star = make_graph({"c", "l1", "l2", "l3"}, {{0, 1}, {0, 2}, {0, 3}});
  const TwinPartition tp = twin_partition(star);
  REQUIRE(tp.count() == 2);
  CHECK(tp.classes[0].members == std::vector<int>{0});
  CHECK(tp.classes[0].kind == TwinKind::Singleton);
  CHECK(tp.classes[1].members == std::vector<int>{1, 2, 3});
  CHECK(tp.classes[1].kind == TwinKind::Open);
  CHECK(tp.class_of[2] == 1);

  // Complete graph: every pair is closed twins.
  const Graph k4 = make_graph({"a", "b", "c", "d"},
                              {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const TwinPartition kp = twin_partition(k4);
  REQUIRE(kp.count() == 1);
  CHECK(kp.classes[0].members.size() == 4);
  CHECK(kp.classes[0].kind == TwinKind::Closed);

  // Four-cycle: two open pairs across the diagonals.
  const Graph c4 = make_graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const TwinPartition cp = twin_partition(c4);
  REQUIRE(cp.count() == 2);
  CHECK(cp.classes[0].members == std::vector<int>{0, 2});
  CHECK(cp.classes[1].members == std::vector<int>{1, 3});
  CHECK(cp.classes[0].kind == TwinKind::Open);
}

TEST_CASE("dot export is stable and quoted") {
  const Graph g = build_total_graph(catalog("T3"));
  CHECK(export_dot(g) == "graph G {\n  \"0\";\n  \"a\";\n  \"0\" -- \"a\";\n}\n");

  const Graph q = make_graph({"say \"hi\""}, {});
  CHECK(export_dot(q) == "graph G {\n  \"say \\\"hi\\\"\";\n}\n");
}
