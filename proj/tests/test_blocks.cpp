#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "aq/blocks.hpp"

using namespace aq;

namespace {

CayleyGraph aqn(int n) { return CayleyGraph(augmented_generators(n)); }
CayleyGraph qn(int n) { return CayleyGraph(hypercube_generators(n)); }

std::set<std::vector<Vertex>> block_sets(const BlockReport& r) {
  std::set<std::vector<Vertex>> out;
  for (const BlockInfo& b : r.blocks) out.insert(b.block);
  return out;
}

// definition-level check: every proper nonzero subspace that the whole
// automorphism group moves to itself or off itself entirely
std::set<std::vector<Vertex>> brute_blocks(const CayleyGraph& g) {
  std::vector<Permutation> elems =
      PermGroup::closure(full_aut(g).generators).elements();
  std::uint32_t count = static_cast<std::uint32_t>(g.vertex_count());

  std::set<std::vector<Vertex>> candidates;
  std::vector<std::uint32_t> nz;
  for (std::uint32_t v = 1; v < count; ++v) nz.push_back(v);
  for (std::size_t i = 0; i < nz.size(); ++i) {
    candidates.insert(Subspace(g.dim(), std::vector<std::uint32_t>{nz[i]}).members());
    for (std::size_t j = i + 1; j < nz.size(); ++j) {
      candidates.insert(Subspace(g.dim(), std::vector<std::uint32_t>{nz[i], nz[j]}).members());
      for (std::size_t k = j + 1; k < nz.size(); ++k)
        candidates.insert(Subspace(g.dim(), std::vector<std::uint32_t>{nz[i], nz[j], nz[k]}).members());
    }
  }

  std::set<std::vector<Vertex>> out;
  for (const auto& members : candidates) {
    if (members.size() >= g.vertex_count()) continue;
    bool block = true;
    for (const Permutation& p : elems) {
      std::vector<Vertex> img;
      for (Vertex v : members) img.push_back(p.apply(v));
      std::sort(img.begin(), img.end());
      if (img == members) continue;
      std::vector<Vertex> common;
      std::set_intersection(img.begin(), img.end(), members.begin(),
                            members.end(), std::back_inserter(common));
      if (!common.empty()) {
        block = false;
        break;
      }
    }
    if (block) out.insert(members);
  }
  return out;
}

}  // namespace

TEST_CASE("minimal blocks on the hypercube") {
  CayleyGraph g = qn(3);
  std::vector<Permutation> gens = full_aut(g).generators;
  CHECK(minimal_block(gens, 0, 7) == std::vector<Vertex>{0, 7});
  CHECK(minimal_block(gens, 0, 3) == std::vector<Vertex>{0, 3, 5, 6});
  CHECK(minimal_block(gens, 0, 1).size() == 8);  // collapses to the whole space

  CHECK_THROWS_AS(minimal_block(gens, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(minimal_block({}, 0, 1), std::invalid_argument);
}

TEST_CASE("stabilizer-closed subspaces are the blocks of a normal graph") {
  StabilizerResult stab = vertex_stabilizer(qn(4));
  auto subs = stabilizer_closed_subspaces(stab, 4);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].members() == std::vector<std::uint32_t>{0, 15});
  CHECK(subs[1].members() ==
        std::vector<std::uint32_t>{0, 3, 5, 6, 9, 10, 12, 15});

  auto aq4 = stabilizer_closed_subspaces(vertex_stabilizer(aqn(4)), 4);
  REQUIRE(aq4.size() == 3);
  CHECK(aq4[0].members() == std::vector<std::uint32_t>{0, 4});
  CHECK(aq4[1].members() == std::vector<std::uint32_t>{0, 3, 4, 7});
  CHECK(aq4[2].members() ==
        std::vector<std::uint32_t>{0, 3, 4, 7, 9, 10, 13, 14});
}

TEST_CASE("blocks of the 4-dimensional augmented cube") {
  CayleyGraph g = aqn(4);
  BlockReport r = blocks_containing_e(g);
  CHECK(r.normal);
  CHECK(r.aut_order == 128);
  CHECK(r.stabilizer_order == 8);
  REQUIRE(r.blocks.size() == 3);
  CHECK(r.blocks[0].block == std::vector<Vertex>{0, 4});
  CHECK(r.blocks[1].block == std::vector<Vertex>{0, 3, 4, 7});
  CHECK(r.blocks[2].block == std::vector<Vertex>{0, 3, 4, 7, 9, 10, 13, 14});
  CHECK(r.blocks[0].subgroup_order == 16);
  CHECK(r.blocks[1].subgroup_order == 32);
  CHECK(r.blocks[2].subgroup_order == 64);
  CHECK(r.axiom_holds);
  CHECK(r.axiom_verified_exhaustively);

  for (const BlockInfo& b : r.blocks) {
    // coset system partitions the space, block first
    CHECK(b.system.size() == g.vertex_count() / b.block.size());
    CHECK(b.system[0] == b.block);
    CHECK(is_subspace(4, b.block));
    // and the block is a union of stabilizer orbits
    StabilizerResult stab = vertex_stabilizer(g);
    for (const auto& orbit : stab.group.orbits()) {
      bool inside = std::binary_search(b.block.begin(), b.block.end(), orbit[0]);
      for (std::uint32_t p : orbit)
        CHECK(std::binary_search(b.block.begin(), b.block.end(), p) == inside);
    }
  }

  // the block lattice here is a chain, closed under intersection
  for (const BlockInfo& a : r.blocks)
    for (const BlockInfo& b : r.blocks) {
      std::vector<Vertex> common;
      std::set_intersection(a.block.begin(), a.block.end(), b.block.begin(),
                            b.block.end(), std::back_inserter(common));
      CHECK((common == std::vector<Vertex>{0} || block_sets(r).count(common)));
    }
}

TEST_CASE("generic closure route agrees with the subspace route") {
  for (int n : {4, 5}) {
    CayleyGraph g = aqn(n);
    auto generic = blocks_by_closure(g);
    CHECK(std::set<std::vector<Vertex>>(generic.begin(), generic.end()) ==
          block_sets(blocks_containing_e(g)));
  }
}

TEST_CASE("reported blocks match the definition-level brute force") {
  for (int n : {3, 4}) {
    CayleyGraph g = aqn(n);
    CHECK(block_sets(blocks_containing_e(g)) == brute_blocks(g));
  }
  CayleyGraph q4 = qn(4);
  CHECK(block_sets(blocks_containing_e(q4)) == brute_blocks(q4));
}

TEST_CASE("blocks of the non-normal member come from the closure route") {
  CayleyGraph g = aqn(3);
  BlockReport r = blocks_containing_e(g);
  CHECK(!r.normal);
  CHECK(r.aut_order == 128);
  CHECK(r.stabilizer_order == 16);
  REQUIRE(r.blocks.size() == 2);
  CHECK(r.blocks[0].block == std::vector<Vertex>{0, 3});
  CHECK(r.blocks[1].block == std::vector<Vertex>{0, 3, 5, 6});
  CHECK(r.axiom_holds);
}

TEST_CASE("hypercube blocks: antipodal pair and even-weight subspace") {
  BlockReport q4 = blocks_containing_e(qn(4));
  REQUIRE(q4.blocks.size() == 2);
  CHECK(q4.blocks[0].block == std::vector<Vertex>{0, 15});
  CHECK(q4.blocks[1].block ==
        std::vector<Vertex>{0, 3, 5, 6, 9, 10, 12, 15});
  CHECK(q4.blocks[0].subgroup_order == 48);
  CHECK(q4.blocks[1].subgroup_order == 192);

  BlockReport q5 = blocks_containing_e(qn(5));
  REQUIRE(q5.blocks.size() == 2);
  CHECK(q5.blocks[0].block == std::vector<Vertex>{0, 31});
  CHECK(q5.blocks[1].block ==
        std::vector<Vertex>{0, 3, 5, 6, 9, 10, 12, 15, 17, 18, 20, 23, 24, 27,
                            29, 30});

  BlockReport q2 = blocks_containing_e(qn(2));
  REQUIRE(q2.blocks.size() == 1);
  CHECK(q2.blocks[0].block == std::vector<Vertex>{0, 3});
}

TEST_CASE("block-subgroup correspondence") {
  CayleyGraph g = aqn(4);
  BlockReport r = blocks_containing_e(g);
  CorrespondenceCertificate cert = verify_block_subgroup_correspondence(g, r);
  CHECK(cert.pass());
  REQUIRE(cert.entries.size() == 3);
  CHECK(cert.entries[0].subgroup_order == 16);
  CHECK(cert.entries[1].subgroup_order == 32);
  CHECK(cert.entries[2].subgroup_order == 64);
  for (const auto& e : cert.entries) {
    CHECK(e.product_closed);
    CHECK(e.orbit_matches);
  }

  CayleyGraph q4 = qn(4);
  CHECK(verify_block_subgroup_correspondence(q4, blocks_containing_e(q4)).pass());

  CayleyGraph g3 = aqn(3);
  BlockReport r3 = blocks_containing_e(g3);
  CHECK_THROWS_AS(verify_block_subgroup_correspondence(g3, r3),
                  std::invalid_argument);
}

TEST_CASE("a tight order cap downgrades the axiom check to generators") {
  SearchCaps caps;
  caps.group_order = 100;
  BlockReport r = blocks_containing_e(aqn(4), caps);
  CHECK(!r.axiom_verified_exhaustively);
  CHECK(r.axiom_holds);
  CHECK(r.blocks.size() == 3);
}
