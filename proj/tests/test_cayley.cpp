#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"

#include "aq/cayley.hpp"

using namespace aq;

TEST_CASE("augmented generator set: units plus suffix-ones words") {
  GeneratorSet s = augmented_generators(4);
  CHECK(s.strings() == std::vector<std::string>{"0001", "0010", "0011", "0100",
                                                "0111", "1000", "1111"});
  CHECK(s.members.size() == 7);
  for (int n = 2; n <= 8; ++n)
    CHECK(augmented_generators(n).members.size() ==
          static_cast<std::size_t>(2 * n - 1));

  CHECK(hypercube_generators(3).strings() ==
        std::vector<std::string>{"001", "010", "100"});
  CHECK(folded_hypercube_generators(3).strings() ==
        std::vector<std::string>{"001", "010", "100", "111"});
}

TEST_CASE("generator set validation") {
  CHECK_THROWS_AS(GeneratorSet(3, {GF2Vector(3, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSet(3, {GF2Vector(3, 1), GF2Vector(3, 1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSet(4, {GF2Vector(3, 1)}), std::invalid_argument);
}

TEST_CASE("adjacency is membership of the difference in S") {
  CayleyGraph g(augmented_generators(3));
  CHECK(g.vertex_count() == 8);
  CHECK(g.degree() == 5);
  CHECK(g.edge_count() == 20);
  CHECK(g.connected());
  for (Vertex u = 0; u < 8; ++u) {
    CHECK(!g.adjacent(u, u));
    for (Vertex v = 0; v < 8; ++v) {
      CHECK(g.adjacent(u, v) == (u != v && g.generators().contains(u ^ v)));
      CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
  }
}

TEST_CASE("every vertex has degree |S| and neighbors are the S translates") {
  CayleyGraph g(augmented_generators(6));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> nb = g.neighbors(v);
    CHECK(nb.size() == static_cast<std::size_t>(g.degree()));
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    std::set<Vertex> expect;
    for (const GF2Vector& s : g.generators().members) expect.insert(v ^ s.bits());
    CHECK(std::set<Vertex>(nb.begin(), nb.end()) == expect);
  }
}

TEST_CASE("distance layers: sizes and the BFS property") {
  CayleyGraph aq4(augmented_generators(4));
  auto layers = distance_partition(aq4, 0);
  REQUIRE(layers.size() == 3);
  CHECK(layers[0] == std::vector<Vertex>{0});
  CHECK(layers[1].size() == 7);
  CHECK(layers[2].size() == 8);

  CayleyGraph q4(hypercube_generators(4));
  auto qlayers = distance_partition(q4, 0);
  REQUIRE(qlayers.size() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(qlayers[i].size() == std::vector<std::size_t>{1, 4, 6, 4, 1}[i]);

  // members of layer i have a neighbor in layer i-1 and none in layers < i-1
  std::vector<int> layer_of(q4.vertex_count(), -1);
  for (std::size_t i = 0; i < qlayers.size(); ++i)
    for (Vertex v : qlayers[i]) layer_of[v] = static_cast<int>(i);
  for (std::size_t i = 1; i < qlayers.size(); ++i)
    for (Vertex v : qlayers[i]) {
      bool back = false;
      for (Vertex w : q4.neighbors(v)) {
        CHECK(layer_of[w] >= static_cast<int>(i) - 1);
        if (layer_of[w] == static_cast<int>(i) - 1) back = true;
      }
      CHECK(back);
    }
}

TEST_CASE("a non-spanning connection set gives a disconnected graph") {
  CayleyGraph g(GeneratorSet(3, {GF2Vector(3, 1), GF2Vector(3, 2)}));
  CHECK(!g.connected());
  auto layers = distance_partition(g, 0);
  std::size_t covered = 0;
  for (const auto& l : layers) covered += l.size();
  CHECK(covered == 4);
}

TEST_CASE("complement swaps the connection set") {
  CayleyGraph g(augmented_generators(3));
  CayleyGraph c = g.complement();
  CHECK(c.degree() == 2);
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = 0; v < 8; ++v)
      if (u != v) CHECK(c.adjacent(u, v) == !g.adjacent(u, v));
  CHECK(c.complement().generators().strings() == g.generators().strings());
}

TEST_CASE("induced subgraph keeps coordinate labels") {
  CayleyGraph g(augmented_generators(3));
  SmallGraph k4 = induced_subgraph(g, {3, 0, 2, 1, 3});  // dedup + sort
  REQUIRE(k4.size() == 4);
  CHECK(k4.label(0) == "000");
  CHECK(k4.label(3) == "011");
  CHECK(k4.edge_count() == 6);
  for (std::size_t i = 0; i < 4; ++i) CHECK(k4.degree(i) == 3);
}

TEST_CASE("dot output is deterministic") {
  CayleyGraph g(GeneratorSet(2, {GF2Vector(2, 3)}));
  CHECK(dot(g) ==
        "graph cayley {\n"
        "  \"00\";\n  \"01\";\n  \"10\";\n  \"11\";\n"
        "  \"00\" -- \"11\";\n  \"01\" -- \"10\";\n"
        "}\n");
  CayleyGraph big(hypercube_generators(11));
  CHECK_THROWS_AS(dot(big), std::invalid_argument);

  SmallGraph path({"a", "b", "c"});
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(dot(path) ==
        "graph g {\n  \"a\";\n  \"b\";\n  \"c\";\n"
        "  \"a\" -- \"b\";\n  \"b\" -- \"c\";\n}\n");
}
