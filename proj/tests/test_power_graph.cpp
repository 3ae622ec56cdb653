#include <doctest.h>

#include "moufang/constructions.hpp"
#include "moufang/power_graph.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace moufang;
using moufang::test::code_of;
using moufang::test::named;

using Arcs = std::vector<std::pair<Vertex, Vertex>>;

TEST_CASE("directed power graphs of small cyclic groups") {
  CHECK(directed_power_graph(cyclic(2)).arcs() == Arcs{{1, 0}});
  CHECK(directed_power_graph(cyclic(3)).arcs() == Arcs{{1, 0}, {1, 2}, {2, 0}, {2, 1}});
  CHECK(directed_power_graph(cyclic(1)).arc_count() == 0);
}

TEST_CASE("out-neighbours of u in O_16") {
  const Loop o16 = generalized_octonion(2);
  const Elem u = named(o16, "u");
  std::vector<Vertex> expected{0, named(o16, "a^2"), named(o16, "a^2u")};
  std::sort(expected.begin(), expected.end());
  CHECK(directed_power_graph(o16).out_neighbors(u) == expected);
}

TEST_CASE("arcs agree with brute-force powers") {
  for (const Loop& l : {cyclic(12), dihedral(5), generalized_quaternion(3), generalized_octonion(2),
                        chein_double(dihedral(3), 0)}) {
    const Digraph d = directed_power_graph(l);
    for (Elem x = 0; x < l.order(); ++x) {
      const auto powers = oracle::left_powers(l, x);
      for (Elem y = 0; y < l.order(); ++y)
        if (x != y) CHECK(d.has_arc(x, y) == powers.contains(y));
    }
  }
}

TEST_CASE("mutual arcs iff equal cyclic subloops") {
  for (const auto& e : build_corpus(24)) {
    const Digraph d = directed_power_graph(e.loop);
    for (Elem x = 0; x < e.order; ++x)
      for (Elem y = x + 1; y < e.order; ++y)
        CHECK((d.has_arc(x, y) && d.has_arc(y, x)) == (subloop_closure(e.loop, {x}) == subloop_closure(e.loop, {y})));
  }
}

TEST_CASE("undirected power graphs") {
  for (std::size_t p : {2, 3, 5, 7}) CHECK(undirected_power_graph(cyclic(p)) == Graph::complete(p));
  const Graph z6 = undirected_power_graph(cyclic(6));
  CHECK(z6.edge_count() < 15);
  for (Vertex a : {2, 4})
    for (Vertex b : {3}) CHECK_FALSE(z6.has_edge(a, b));
  const Loop o16 = generalized_octonion(2);
  CHECK(undirected_power_graph(o16).degree(named(o16, "a^2")) == 15);
  CHECK(undirected_power_graph(o16) == underlying(directed_power_graph(o16)));
}

TEST_CASE("universal vertices") {
  CHECK(universal_vertices(Graph::complete(5)).size() == 5);
  const Loop o16 = generalized_octonion(2);
  CHECK(universal_vertices(undirected_power_graph(o16)) == std::vector<Vertex>{0, named(o16, "a^2")});
  CHECK(universal_vertices(undirected_power_graph(cyclic(6))) == std::vector<Vertex>{0, 1, 5});
  CHECK(universal_vertices(Graph(1, {})) == std::vector<Vertex>{0});
}

TEST_CASE("max clique") {
  CHECK(max_clique(Graph::complete(6)) == 6);
  CHECK(max_clique(Graph(0, {})) == 0);
  CHECK(max_clique(undirected_power_graph(generalized_quaternion(4))) == 8);
  CHECK(max_clique(undirected_power_graph(generalized_octonion(2))) == 4);
  CHECK(code_of([] { max_clique(Graph(257, {})); }) == ErrorCode::OrderTooLarge);
}

TEST_CASE("max clique agrees with subset enumeration") {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + i % 14;
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.6 * (i % 5) / 4.0);
    CHECK(max_clique(g) == oracle::max_clique(g));
  }
  for (const auto& e : build_corpus(16)) CHECK(max_clique(undirected_power_graph(e.loop)) == oracle::max_clique(undirected_power_graph(e.loop)));
}

TEST_CASE("closed twin classes") {
  CHECK(closed_twin_classes(Graph::complete(4)).size() == 1);
  using Classes = std::vector<std::vector<Vertex>>;
  CHECK(closed_twin_classes(undirected_power_graph(cyclic(6))) == Classes{{0, 1, 5}, {2, 4}, {3}});
  // Leaves of a star are open twins, not closed ones.
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(closed_twin_classes(star) == Classes{{0}, {1}, {2}, {3}});
}

TEST_CASE("graph construction errors") {
  CHECK(code_of([] { Graph(3, {{0, 0}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Graph(3, {{0, 3}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Digraph(2, {{1, 1}}); }) == ErrorCode::InvalidArgument);
  CHECK(Graph(3, {{0, 1}, {1, 0}}).edge_count() == 1);
  const Loop bad = validate_table({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}});
  CHECK(code_of([&] { directed_power_graph(bad); }) == ErrorCode::NotPowerAssociative);
}
