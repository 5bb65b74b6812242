#include <stdexcept>

#include "doctest.h"

#include "aq/report.hpp"

using namespace aq;

TEST_CASE("family names parse and print") {
  CHECK(parse_family("augmented") == Family::Augmented);
  CHECK(parse_family("hypercube") == Family::Hypercube);
  CHECK(parse_family("folded") == Family::Folded);
  CHECK(parse_family("custom") == Family::Custom);
  CHECK_THROWS_AS(parse_family("cube"), std::invalid_argument);
  CHECK(family_name(Family::Folded) == "folded");
  CHECK_THROWS_AS(family_generators(Family::Custom, 4), std::invalid_argument);
  CHECK(family_graph(Family::Hypercube, 3).degree() == 3);
}

TEST_CASE("graph summary") {
  Json j = graph_json(family_graph(Family::Augmented, 4));
  CHECK(j["n"] == 4);
  CHECK(j["vertices"] == 16);
  CHECK(j["degree"] == 7);
  CHECK(j["edges"] == 56);
  CHECK(j["connected"] == true);
  CHECK(j["generators"].size() == 7);
  CHECK(j["distance_layer_sizes"] == Json::array({1, 7, 8}));
}

TEST_CASE("automorphism report certifies both verdicts") {
  Json good = aut_json(family_graph(Family::Augmented, 4));
  CHECK(good["order"] == 128);
  CHECK(good["stabilizer"]["order"] == 8);
  CHECK(good["stabilizer"]["type"] == "D8");
  CHECK(good["normality"]["normal"] == true);
  CHECK(good["normality"]["stabilizer_matrices"].size() == 8);
  CHECK(good["semidirect"]["pass"] == true);
  CHECK(json_pass(good));

  Json bad = aut_json(family_graph(Family::Augmented, 3));
  CHECK(bad["order"] == 128);
  CHECK(bad["stabilizer"]["type"] == "D8 x C2");
  CHECK(bad["normality"]["normal"] == false);
  CHECK(bad["normality"].contains("nonlinear_stabilizer_element"));
  CHECK(!bad.contains("semidirect"));
  CHECK(json_pass(bad));

  Json k4 = aut_json(family_graph(Family::Augmented, 2));
  CHECK(k4["order"] == 24);
  CHECK(k4["full_type"] == "S4");
  CHECK(k4["stabilizer"]["type"] == "D6");

  Json folded = aut_json(family_graph(Family::Folded, 3));
  CHECK(folded["order"] == 1152);
  CHECK(folded["normality"]["normal"] == false);
  CHECK(json_pass(folded));
}

TEST_CASE("clique report") {
  Json j = cliques_json(family_graph(Family::Augmented, 4));
  CHECK(j["clique_number"] == 4);
  CHECK(j["count"] == 12);
  CHECK(j["verified"] == true);
  CHECK(j["orbits"]["count"] == 2);
  CHECK(j["orbits"]["sizes"] == Json::array({8, 4}));
  REQUIRE(j.contains("aq4"));
  CHECK(j["aq4"]["named_match_search"] == true);
  CHECK(j["aq4"]["named_cliques"].size() == 12);
  CHECK(j["aq4"]["action_on_first_eight"]["image_order"] == 128);
  CHECK(j["aq4"]["action_on_first_eight"]["faithful"] == true);
  CHECK(j["aq4"]["clique_quadruple_block"]["pass"] == true);
  CHECK(j["aq4"]["structure"]["pass"] == true);
  CHECK(j["aq4"]["coset_family_edge_counts"][0]["counts"][0] ==
        Json::array({6, 4, 8, 4}));
  CHECK(json_pass(j));

  Json q3 = cliques_json(family_graph(Family::Hypercube, 3));
  CHECK(q3["clique_number"] == 2);
  CHECK(q3["count"] == 12);
  CHECK(q3["orbits"]["count"] == 1);
  CHECK(!q3.contains("aq4"));
  CHECK(json_pass(q3));
}

TEST_CASE("block report") {
  Json j = blocks_json(family_graph(Family::Augmented, 4));
  CHECK(j["normal"] == true);
  CHECK(j["count"] == 3);
  CHECK(j["blocks"][0]["size"] == 2);
  CHECK(j["blocks"][0]["cosets"] == 8);
  CHECK(j["blocks"][2]["cosets"] == 2);
  CHECK(j["blocks"][2]["subgroup_order"] == 64);
  CHECK(j["axiom_holds"] == true);
  CHECK(j["correspondence"]["pass"] == true);
  CHECK(json_pass(j));

  Json j3 = blocks_json(family_graph(Family::Augmented, 3));
  CHECK(j3["normal"] == false);
  CHECK(j3["count"] == 2);
  CHECK(!j3.contains("correspondence"));
  CHECK(json_pass(j3));
}

TEST_CASE("structure reports pass their expected-versus-actual tables") {
  for (int n : {2, 3, 4}) {
    Json j = structure_json(Family::Augmented, n);
    for (const Json& e : j["expected"])
      CHECK_MESSAGE(e["pass"] == true, e.dump());
    CHECK(json_pass(j));
  }
  for (int n : {2, 3}) {
    Json j = structure_json(Family::Hypercube, n);
    for (const Json& e : j["expected"])
      CHECK_MESSAGE(e["pass"] == true, e.dump());
    CHECK(json_pass(j));
  }
}

TEST_CASE("reports round-trip through their serialization byte for byte") {
  Json j = structure_json(Family::Augmented, 3);
  std::string once = j.dump(2);
  Json back = Json::parse(once);
  CHECK(back == j);
  CHECK(back.dump(2) == once);
}

TEST_CASE("text rendering is deterministic and carries the verdict") {
  Json j = aut_json(family_graph(Family::Augmented, 4));
  std::string text = render_text(j);
  CHECK(text == render_text(j));
  CHECK(text.find("pass: true") != std::string::npos);
  CHECK(text.find("order: 128") != std::string::npos);

  CHECK(!json_pass(Json::object()));
  CHECK(!json_pass(Json{{"pass", false}}));
  CHECK(json_pass(Json{{"pass", true}}));
}
