#include "aq/report.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace aq {

Family parse_family(const std::string& name) {
  if (name == "augmented") return Family::Augmented;
  if (name == "hypercube") return Family::Hypercube;
  if (name == "folded") return Family::Folded;
  if (name == "custom") return Family::Custom;
  throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Augmented: return "augmented";
    case Family::Hypercube: return "hypercube";
    case Family::Folded: return "folded";
    case Family::Custom: return "custom";
  }
  throw std::logic_error("bad family");
}

GeneratorSet family_generators(Family f, int n) {
  switch (f) {
    case Family::Augmented: return augmented_generators(n);
    case Family::Hypercube: return hypercube_generators(n);
    case Family::Folded: return folded_hypercube_generators(n);
    case Family::Custom: break;
  }
  throw std::invalid_argument("a custom family needs explicit generators");
}

CayleyGraph family_graph(Family f, int n) {
  return CayleyGraph(family_generators(f, n));
}

namespace {

// fingerprint() refuses anything larger, so recognition is guarded by this.
constexpr std::uint64_t kRecognitionCap = 512;

Json words_json(int n, const std::vector<Vertex>& vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(GF2Vector(n, v).str());
  return a;
}

Json perm_json(const Permutation& p) {
  if (p.degree() <= 64) return p.cycles();
  return Json(p.images());
}

Json fingerprint_json(const Fingerprint& fp) {
  Json hist = Json::object();
  for (auto [ord, cnt] : fp.order_histogram) hist[std::to_string(ord)] = cnt;
  return Json{{"order", fp.order},
              {"abelian", fp.abelian},
              {"center_order", fp.center_order},
              {"element_orders", hist}};
}

bool is_augmented(const CayleyGraph& g) {
  return g.generators().members == augmented_generators(g.dim()).members;
}

}  // namespace

Json graph_json(const CayleyGraph& g) {
  Json j;
  j["n"] = g.dim();
  j["vertices"] = g.vertex_count();
  j["degree"] = g.degree();
  j["edges"] = g.edge_count();
  j["connected"] = g.connected();
  j["generators"] = g.generators().strings();
  Json sizes = Json::array();
  for (const auto& layer : distance_partition(g, 0)) sizes.push_back(layer.size());
  j["distance_layer_sizes"] = sizes;
  return j;
}

Json aut_json(const CayleyGraph& g, const SearchCaps& caps) {
  FullAutResult aut = full_aut(g, caps);
  NormalityCertificate norm = normality_certificate(aut.stabilizer);

  Json j;
  j["order"] = aut.order;
  j["translation_order"] = aut.translation_order;
  j["generators_preserve_adjacency"] = aut.generators_preserve_adjacency;

  Json stab;
  stab["order"] = aut.stabilizer.group.order();
  if (aut.stabilizer.group.order() <= kRecognitionCap) {
    stab["type"] = recognize(aut.stabilizer.group).str();
    stab["fingerprint"] = fingerprint_json(fingerprint(aut.stabilizer.group));
  }
  j["stabilizer"] = stab;
  if (aut.order <= kRecognitionCap)
    j["full_type"] =
        recognize(PermGroup::closure(aut.generators, caps.group_order)).str();

  Json nj;
  nj["normal"] = norm.normal;
  if (norm.normal) {
    Json ms = Json::array();
    for (const GF2Matrix& m : norm.matrices) ms.push_back(m.str());
    nj["stabilizer_matrices"] = ms;
  } else if (norm.counterexample) {
    nj["nonlinear_stabilizer_element"] = perm_json(*norm.counterexample);
  }
  j["normality"] = nj;

  bool pass = aut.generators_preserve_adjacency;
  if (norm.normal) {
    SemidirectCertificate sd = verify_semidirect(g, aut, caps);
    j["semidirect"] = Json{{"conjugation", sd.conjugation},
                           {"trivial_intersection", sd.trivial_intersection},
                           {"order_product", sd.order_product},
                           {"checked_exhaustively", sd.product_checked_exhaustively},
                           {"pass", sd.pass()}};
    pass = pass && sd.pass();
  } else {
    pass = pass && norm.counterexample.has_value();
  }
  j["pass"] = pass;
  return j;
}

Json cliques_json(const CayleyGraph& g, const SearchCaps& caps) {
  int n = g.dim();
  std::vector<Clique> cliques = max_cliques(g);

  // Re-verify the search output: each listed set complete, and maximal.
  bool verified = !cliques.empty();
  for (const Clique& c : cliques) {
    for (std::size_t i = 0; i < c.size() && verified; ++i)
      for (std::size_t k = i + 1; k < c.size(); ++k)
        if (!g.adjacent(c[i], c[k])) verified = false;
    for (Vertex v = 0; v < g.vertex_count() && verified; ++v) {
      if (std::binary_search(c.begin(), c.end(), v)) continue;
      bool all = true;
      for (Vertex u : c)
        if (!g.adjacent(u, v)) {
          all = false;
          break;
        }
      if (all) verified = false;
    }
  }

  FullAutResult aut = full_aut(g, caps);
  auto orbits = clique_orbit_partition(aut.generators, cliques);

  Json j;
  j["clique_number"] = cliques.empty() ? 0 : cliques.front().size();
  j["count"] = cliques.size();
  j["verified"] = verified;
  Json sizes = Json::array();
  for (const auto& o : orbits) sizes.push_back(o.size());
  j["orbits"] = Json{{"count", orbits.size()}, {"sizes", sizes}};
  if (cliques.size() <= 16) {
    Json list = Json::array();
    for (const Clique& c : cliques) list.push_back(words_json(n, c));
    j["cliques"] = list;
  }

  bool pass = verified;
  if (n == 4 && is_augmented(g)) {
    std::vector<Clique> named = aq4_cliques();
    std::set<Clique> want(named.begin(), named.end());
    std::set<Clique> got(cliques.begin(), cliques.end());
    bool match = want == got;

    Json aq4;
    Json nm = Json::array();
    for (std::size_t i = 0; i < named.size(); ++i)
      nm.push_back(Json{{"label", clique_label(static_cast<std::uint32_t>(i))},
                        {"members", words_json(n, named[i])}});
    aq4["named_cliques"] = nm;
    aq4["named_match_search"] = match;

    Json fams = Json::array();
    for (std::size_t f = 0; f < 3; ++f) {
      std::vector<Clique> fam(named.begin() + 4 * f, named.begin() + 4 * (f + 1));
      auto counts = inter_clique_edge_counts(g, fam);
      Json labels = Json::array();
      for (std::size_t i = 0; i < 4; ++i)
        labels.push_back(clique_label(static_cast<std::uint32_t>(4 * f + i)));
      Json rows = Json::array();
      for (const auto& row : counts) rows.push_back(row);
      fams.push_back(Json{{"labels", labels}, {"counts", rows}});
    }
    aq4["coset_family_edge_counts"] = fams;

    PermGroup full = PermGroup::closure(aut.generators, caps.group_order);
    std::vector<std::vector<std::uint32_t>> eight(named.begin(), named.begin() + 8);
    InducedAction act = induced_action(full, eight);
    aq4["action_on_first_eight"] = Json{{"image_order", act.image.order()},
                                        {"kernel_order", act.kernel_order},
                                        {"faithful", act.faithful()}};

    CliqueBlockCertificate cb = verify_clique_block(full);
    aq4["clique_quadruple_block"] = Json{{"pass", cb.pass},
                                         {"fixing_example", cb.fixing_example},
                                         {"swapping_example", cb.swapping_example}};

    Aq4StructureCertificate st = verify_aq4_structure(full);
    aq4["structure"] = Json{{"n1_dihedral8", st.n1_dihedral8},
                            {"n2_dihedral8", st.n2_dihedral8},
                            {"trivial_intersection", st.trivial_intersection},
                            {"commute", st.commute},
                            {"swapped_by_reversal", st.swapped_by_reversal},
                            {"product_order", st.product_order},
                            {"full_order", st.full_order},
                            {"pass", st.pass()}};
    j["aq4"] = aq4;
    pass = pass && match && act.faithful() && act.image.order() == 128 &&
           cb.pass && st.pass();
  }
  j["pass"] = pass;
  return j;
}

Json blocks_json(const CayleyGraph& g, const SearchCaps& caps) {
  int n = g.dim();
  BlockReport r = blocks_containing_e(g, caps);

  Json j;
  j["normal"] = r.normal;
  j["aut_order"] = r.aut_order;
  j["stabilizer_order"] = r.stabilizer_order;
  j["count"] = r.blocks.size();
  Json arr = Json::array();
  for (const BlockInfo& info : r.blocks) {
    Json b;
    b["size"] = info.block.size();
    if (info.block.size() <= 64) b["members"] = words_json(n, info.block);
    Json basis = Json::array();
    for (const GF2Vector& v : info.subspace.basis()) basis.push_back(v.str());
    b["subspace_basis"] = basis;
    b["cosets"] = info.system.size();
    b["subgroup_order"] = info.subgroup_order;
    arr.push_back(b);
  }
  j["blocks"] = arr;
  j["axiom_holds"] = r.axiom_holds;
  j["axiom_verified_exhaustively"] = r.axiom_verified_exhaustively;

  bool pass = r.axiom_holds;
  if (r.normal && !r.blocks.empty()) {
    CorrespondenceCertificate cert =
        verify_block_subgroup_correspondence(g, r, caps);
    Json entries = Json::array();
    for (const auto& e : cert.entries)
      entries.push_back(Json{{"block_size", e.block.size()},
                             {"subgroup_order", e.subgroup_order},
                             {"product_closed", e.product_closed},
                             {"orbit_matches", e.orbit_matches}});
    j["correspondence"] = Json{{"entries", entries}, {"pass", cert.pass()}};
    pass = pass && cert.pass();
  }
  j["pass"] = pass;
  return j;
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

Json structure_json(Family f, int n, const SearchCaps& caps) {
  CayleyGraph g = family_graph(f, n);
  Json j;
  j["family"] = family_name(f);
  j["n"] = n;
  j["graph"] = graph_json(g);
  Json aut = aut_json(g, caps);
  Json cl = cliques_json(g, caps);
  Json bl = blocks_json(g, caps);
  j["aut"] = aut;
  j["cliques"] = cl;
  j["blocks"] = bl;

  Json expected = Json::array();
  auto check = [&](const std::string& name, const Json& want, const Json& got) {
    expected.push_back(Json{
        {"name", name}, {"expected", want}, {"actual", got}, {"pass", want == got}});
  };
  auto block_sizes = [&] {
    Json sizes = Json::array();
    for (const auto& b : bl["blocks"]) sizes.push_back(b["size"]);
    return sizes;
  };

  if (f == Family::Augmented) {
    std::uint64_t order = n == 2 ? 24 : n == 3 ? 128 : std::uint64_t{1} << (n + 3);
    check("aut_order", order, aut["order"]);
    check("stabilizer_order", n == 2 ? 6 : n == 3 ? 16 : 8,
          aut["stabilizer"]["order"]);
    check("stabilizer_type", n == 2 ? "D6" : n == 3 ? "D8 x C2" : "D8",
          aut["stabilizer"].contains("type") ? aut["stabilizer"]["type"] : Json());
    if (n == 2)
      check("full_type", "S4",
            aut.contains("full_type") ? aut["full_type"] : Json());
    check("normal", n != 3, aut["normality"]["normal"]);
    check("clique_number", 4, cl["clique_number"]);
    check("clique_count", std::uint64_t(n - 1) << (n - 2), cl["count"]);
    check("clique_orbits", n / 2, cl["orbits"]["count"]);
    if (n == 4) {
      check("block_sizes", Json::array({2, 4, 8}), block_sizes());
      Json orders = Json::array();
      for (const auto& b : bl["blocks"]) orders.push_back(b["subgroup_order"]);
      check("block_subgroup_orders", Json::array({16, 32, 64}), orders);
    }
  } else if (f == Family::Hypercube) {
    check("aut_order", factorial(n) << n, aut["order"]);
    check("stabilizer_order", factorial(n), aut["stabilizer"]["order"]);
    check("normal", true, aut["normality"]["normal"]);
    check("clique_number", 2, cl["clique_number"]);
    check("clique_count", static_cast<std::uint64_t>(n) << (n - 1), cl["count"]);
    check("clique_orbits", 1, cl["orbits"]["count"]);
    check("block_count", n == 2 ? 1 : 2, bl["count"]);
    Json sizes = n == 2 ? Json::array({2})
                        : Json::array({2, std::uint64_t{1} << (n - 1)});
    check("block_sizes", sizes, block_sizes());
  }
  j["expected"] = expected;

  bool pass = json_pass(aut) && json_pass(cl) && json_pass(bl);
  for (const auto& e : expected) pass = pass && e["pass"].get<bool>();
  j["pass"] = pass;
  return j;
}

bool json_pass(const Json& j) {
  return j.is_object() && j.contains("pass") && j["pass"].is_boolean() &&
         j["pass"].get<bool>();
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat_array(const Json& j) {
  return j.is_array() &&
         std::all_of(j.begin(), j.end(), [](const Json& v) { return is_scalar(v); });
}

std::string scalar_str(const Json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

void render(const Json& j, std::string& out, int indent) {
  std::string pad(2 * static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value))
        out += pad + key + ": " + scalar_str(value) + "\n";
      else if (is_flat_array(value))
        out += pad + key + ": " + value.dump() + "\n";
      else {
        out += pad + key + ":\n";
        render(value, out, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const Json& value : j) {
      if (is_scalar(value))
        out += pad + "- " + scalar_str(value) + "\n";
      else if (is_flat_array(value))
        out += pad + "- " + value.dump() + "\n";
      else {
        out += pad + "-\n";
        render(value, out, indent + 1);
      }
    }
  } else {
    out += pad + scalar_str(j) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render(j, out, 0);
  return out;
}

}  // namespace aq
