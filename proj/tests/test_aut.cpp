#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"

#include "aq/aut.hpp"

using namespace aq;

namespace {

CayleyGraph aqn(int n) { return CayleyGraph(augmented_generators(n)); }
CayleyGraph qn(int n) { return CayleyGraph(hypercube_generators(n)); }

// all permutations of the nonzero vertices that fix 0 and preserve adjacency
std::vector<Permutation> brute_stabilizer(const CayleyGraph& g) {
  std::vector<std::uint32_t> rest;
  for (Vertex v = 1; v < g.vertex_count(); ++v) rest.push_back(v);
  std::vector<Permutation> out;
  do {
    std::vector<std::uint32_t> images{0};
    images.insert(images.end(), rest.begin(), rest.end());
    Permutation p(images);
    if (preserves_adjacency(g, p)) out.push_back(p);
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("translations act by xor and preserve adjacency") {
  CHECK(translation(2, GF2Vector(2, 3)).images() ==
        std::vector<std::uint32_t>{3, 2, 1, 0});
  CayleyGraph g = aqn(3);
  for (Vertex z = 0; z < 8; ++z) {
    Permutation rho = translation(3, GF2Vector(3, z));
    CHECK(preserves_adjacency(g, rho));
    for (Vertex x = 0; x < 8; ++x) CHECK(rho.apply(x) == (x ^ z));
  }
  // swapping just two vertices is not an automorphism here
  CHECK(!preserves_adjacency(g, Permutation({1, 0, 2, 3, 4, 5, 6, 7})));
}

TEST_CASE("vertex stabilizer orders across the families") {
  CHECK(vertex_stabilizer(aqn(2)).group.order() == 6);
  CHECK(vertex_stabilizer(aqn(3)).group.order() == 16);
  CHECK(vertex_stabilizer(aqn(4)).group.order() == 8);
  CHECK(vertex_stabilizer(aqn(5)).group.order() == 8);
  CHECK(vertex_stabilizer(qn(3)).group.order() == 6);
  CHECK(vertex_stabilizer(qn(4)).group.order() == 24);
}

TEST_CASE("stabilizer elements fix 0 and preserve adjacency") {
  CayleyGraph g = aqn(5);
  StabilizerResult stab = vertex_stabilizer(g);
  for (const Permutation& p : stab.group.elements()) {
    CHECK(p.apply(0) == 0);
    CHECK(preserves_adjacency(g, p));
  }
}

TEST_CASE("stabilizer search equals the brute-force filter for small n") {
  for (int n : {2, 3}) {
    CayleyGraph g = aqn(n);
    CHECK(vertex_stabilizer(g).group.elements() == brute_stabilizer(g));
  }
}

TEST_CASE("linearity certificates split the stabilizer") {
  StabilizerResult aq4 = vertex_stabilizer(aqn(4));
  CHECK(aq4.all_linear());
  for (std::size_t i = 0; i < aq4.group.order(); ++i) {
    REQUIRE(aq4.linear[i].has_value());
    CHECK(matrix_permutation(*aq4.linear[i]) == aq4.group.elements()[i]);
  }

  StabilizerResult aq3 = vertex_stabilizer(aqn(3));
  CHECK(!aq3.all_linear());
  std::size_t linear = 0;
  for (const auto& m : aq3.linear)
    if (m) ++linear;
  CHECK(linear == 8);
}

TEST_CASE("full group is translations times the stabilizer") {
  for (int n : {2, 3, 4, 5}) {
    FullAutResult full = full_aut(aqn(n));
    CHECK(full.translation_order == (std::uint64_t{1} << n));
    CHECK(full.order == full.translation_order * full.stabilizer.group.order());
    CHECK(full.generators_preserve_adjacency);
  }
  CHECK(full_aut(aqn(2)).order == 24);
  CHECK(full_aut(aqn(3)).order == 128);
  CHECK(full_aut(aqn(4)).order == 128);
  CHECK(full_aut(aqn(5)).order == 256);
  CHECK(full_aut(qn(4)).order == 384);
}

TEST_CASE("matrices fixing the connection set") {
  GeneratorSet s = augmented_generators(4);
  std::vector<GF2Matrix> ms = group_automorphisms_fixing_s(s);
  CHECK(ms.size() == 8);
  CHECK(std::is_sorted(ms.begin(), ms.end()));
  for (const GF2Matrix& m : ms) {
    CHECK(m.invertible());
    for (const GF2Vector& v : s.members) CHECK(s.contains(m.apply(v).bits()));
  }

  // as vertex permutations they form exactly the stabilizer here (normal case)
  std::vector<Permutation> perms;
  for (const GF2Matrix& m : ms) perms.push_back(matrix_permutation(m));
  std::sort(perms.begin(), perms.end());
  CHECK(perms == vertex_stabilizer(aqn(4)).group.elements());

  // hypercube: exactly the n! permutation matrices
  CHECK(group_automorphisms_fixing_s(hypercube_generators(3)).size() == 6);

  // and in the non-normal case a proper subset of the stabilizer
  std::vector<GF2Matrix> aq3 = group_automorphisms_fixing_s(augmented_generators(3));
  CHECK(aq3.size() == 8);
  StabilizerResult stab3 = vertex_stabilizer(aqn(3));
  for (const GF2Matrix& m : aq3) CHECK(stab3.group.contains(matrix_permutation(m)));
}

TEST_CASE("matrix search equals the exhaustive matrix filter at n=3") {
  GeneratorSet s = augmented_generators(3);
  std::set<std::string> brute;
  for (std::uint32_t r1 = 0; r1 < 8; ++r1)
    for (std::uint32_t r2 = 0; r2 < 8; ++r2)
      for (std::uint32_t r3 = 0; r3 < 8; ++r3) {
        GF2Matrix m({GF2Vector(3, r1), GF2Vector(3, r2), GF2Vector(3, r3)});
        if (!m.invertible()) continue;
        bool fixes = true;
        for (const GF2Vector& v : s.members)
          if (!s.contains(m.apply(v).bits())) fixes = false;
        if (fixes) brute.insert(m.str());
      }
  std::set<std::string> found;
  for (const GF2Matrix& m : group_automorphisms_fixing_s(s)) found.insert(m.str());
  CHECK(found == brute);
}

TEST_CASE("the three standard stabilizer generators") {
  auto gens = augmented_stabilizer_generators(4);
  CHECK(gens[0].str() == "1000/0100/0001/0010");
  CHECK(gens[1].str() == "1111/0100/0010/0001");
  CHECK(gens[2].str() == "0010/0100/1000/1111");

  for (int n : {4, 5, 6}) {
    GeneratorSet s = augmented_generators(n);
    std::vector<Permutation> perms;
    for (const GF2Matrix& m : augmented_stabilizer_generators(n)) {
      CHECK(m.invertible());
      for (const GF2Vector& v : s.members) CHECK(s.contains(m.apply(v).bits()));
      perms.push_back(matrix_permutation(m));
    }
    PermGroup generated = PermGroup::closure(perms);
    CHECK(generated.elements() == vertex_stabilizer(aqn(n)).group.elements());
  }
}

TEST_CASE("normality certificates carry evidence both ways") {
  NormalityCertificate good = is_normal_cayley(aqn(4));
  CHECK(good.normal);
  CHECK(good.matrices.size() == 8);
  StabilizerResult stab4 = vertex_stabilizer(aqn(4));
  for (const GF2Matrix& m : good.matrices)
    CHECK(stab4.group.contains(matrix_permutation(m)));

  NormalityCertificate bad = is_normal_cayley(aqn(3));
  CHECK(!bad.normal);
  REQUIRE(bad.counterexample.has_value());
  CayleyGraph g3 = aqn(3);
  CHECK(bad.counterexample->apply(0) == 0);
  CHECK(preserves_adjacency(g3, *bad.counterexample));
  CHECK(!permutation_is_linear(*bad.counterexample, 3).has_value());
}

TEST_CASE("normal iff the linear part fills the stabilizer") {
  for (int n : {2, 3, 4}) {
    CayleyGraph g = aqn(n);
    bool normal = is_normal_cayley(g).normal;
    std::size_t linear = group_automorphisms_fixing_s(g.generators()).size();
    std::size_t stab = vertex_stabilizer(g).group.order();
    CHECK(normal == (linear == stab));
  }
  CayleyGraph q4 = qn(4);
  CHECK(is_normal_cayley(q4).normal ==
        (group_automorphisms_fixing_s(q4.generators()).size() ==
         vertex_stabilizer(q4).group.order()));
}

TEST_CASE("semidirect product certificate") {
  CayleyGraph g4 = aqn(4);
  SemidirectCertificate sd = verify_semidirect(g4, full_aut(g4));
  CHECK(sd.conjugation);
  CHECK(sd.trivial_intersection);
  CHECK(sd.order_product);
  CHECK(sd.product_checked_exhaustively);
  CHECK(sd.pass());

  CayleyGraph q4 = qn(4);
  CHECK(verify_semidirect(q4, full_aut(q4)).pass());

  CayleyGraph g3 = aqn(3);
  CHECK_THROWS_AS(verify_semidirect(g3, full_aut(g3)), std::invalid_argument);
}

TEST_CASE("fixing a vertex and all its neighbors forces the identity, n >= 4") {
  CHECK(pointwise_neighborhood_stabilizer(aqn(2)).order() == 1);
  for (int n : {4, 5, 6})
    CHECK(pointwise_neighborhood_stabilizer(aqn(n)).order() == 1);
  CHECK(pointwise_neighborhood_stabilizer(qn(4)).order() == 1);

  // n = 3 is the exception: swapping 101 and 110 fixes 0 and all five of
  // its neighbors yet preserves adjacency.  No larger group fits: a trivial
  // pointwise fixer would embed the order-16 stabilizer into Sym(5).
  PermGroup l3 = pointwise_neighborhood_stabilizer(aqn(3));
  CHECK(l3.order() == 2);
  CHECK(l3.elements()[1].images() == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 6, 5, 7});
}

TEST_CASE("automorphisms of the neighborhood subgraph of vertex 0") {
  // At n = 3 the five neighbors of 0 induce two triangles sharing the
  // vertex 011: the cut vertex is pinned, each triangle's remaining pair
  // can swap, and the triangles can trade places, so the order is 8.
  CayleyGraph g3 = aqn(3);
  SmallGraph nb3 = induced_subgraph(g3, g3.neighbors(0));
  REQUIRE(nb3.size() == 5);
  CHECK(nb3.edge_count() == 6);
  PermGroup found = graph_automorphisms(nb3);
  CHECK(found.order() == 8);
  CHECK(recognize(found).str() == "D8");

  // independent oracle: filter all 120 permutations of the five vertices
  std::vector<std::uint32_t> images{0, 1, 2, 3, 4};
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < 5 && ok; ++i)
      for (std::size_t j = i + 1; j < 5 && ok; ++j)
        if (nb3.adjacent(i, j) != nb3.adjacent(images[i], images[j])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(images.begin(), images.end()));
  CHECK(count == 8);

  // From n = 4 on the neighborhood graph keeps order 8 as well.
  for (int n : {4, 5, 6}) {
    CayleyGraph g = aqn(n);
    PermGroup grp = graph_automorphisms(induced_subgraph(g, g.neighbors(0)));
    CHECK(grp.order() == 8);
    CHECK(recognize(grp).str() == "D8");
  }
}

TEST_CASE("caps make the searches refuse instead of degrade") {
  SearchCaps small_dim;
  small_dim.stabilizer_dim = 3;
  CHECK_THROWS_AS(vertex_stabilizer(aqn(4), small_dim), cap_exceeded);

  SearchCaps small_order;
  small_order.group_order = 4;
  CHECK_THROWS_AS(vertex_stabilizer(aqn(4), small_order), cap_exceeded);
}
