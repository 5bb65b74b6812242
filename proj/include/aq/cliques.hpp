#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aq/cayley.hpp"
#include "aq/perm.hpp"

// Maximum cliques of Cayley graphs over GF(2)^n and what the automorphism
// group does to them.  A clique travels as its ascending vertex list, which
// doubles as its canonical form.

namespace aq {

using Clique = std::vector<Vertex>;

// Every maximum clique, each ascending, the list sorted lexicographically.
// Bron-Kerbosch with a greedy pivot over the whole vertex set; refuses
// degrees past the cap.
std::vector<Clique> max_cliques(const CayleyGraph& g, int degree_cap = 24);

// The twelve maximum cliques of the 4-dimensional augmented cube in their
// conventional numbering C_1 .. C_12: three cliques through 0 (one per
// triangle subspace) and their coset copies.
std::vector<Clique> aq4_cliques();

struct CliqueOrbitReport {
  std::vector<Clique> cliques;
  std::vector<std::vector<std::size_t>> orbits;  // index classes, by least index
  PermGroup action;                              // induced group on indices
  std::uint64_t kernel_order = 0;
  bool faithful = false;
};

// Orbit structure of an enumerated automorphism group on a clique list.
// Throws if some element fails to permute the list.
CliqueOrbitReport clique_orbits(const PermGroup& aut,
                                const std::vector<Clique>& cliques);

// Orbit partition alone, from generators, for groups too large to enumerate.
std::vector<std::vector<std::size_t>> clique_orbit_partition(
    const std::vector<Permutation>& gens, const std::vector<Clique>& cliques);

// Symmetric matrix of edge counts between pairwise disjoint cliques; the
// diagonal counts internal edges.  Throws when cliques overlap.
std::vector<std::vector<std::uint64_t>> inter_clique_edge_counts(
    const CayleyGraph& g, const std::vector<Clique>& cliques);

struct CliqueBlockCertificate {
  bool pass = false;
  // Cycle forms (on C-labels) of one element fixing {C_1..C_4} setwise and
  // one swapping it with {C_5..C_8}.
  std::string fixing_example;
  std::string swapping_example;
};

// Checks that every automorphism of the 4-dimensional augmented cube maps
// the clique quadruple {C_1..C_4} either to itself or to {C_5..C_8}.
CliqueBlockCertificate verify_clique_block(const PermGroup& aut);

struct Aq4StructureCertificate {
  bool n1_dihedral8 = false;        // translations by e_3, e_4 with the
                                    // last-coordinate swap, on clique indices
  bool n2_dihedral8 = false;        // translations by e_1, all-ones with the
                                    // e_1 -> all-ones map
  bool trivial_intersection = false;
  bool commute = false;             // elementwise between the two
  bool swapped_by_reversal = false; // conjugation by the reversal map swaps them
  std::uint64_t product_order = 0;  // |N1 N2| as a set of vertex permutations
  bool full_order = false;          // together with the reversal: order 128

  bool pass() const {
    return n1_dihedral8 && n2_dihedral8 && trivial_intersection && commute &&
           swapped_by_reversal && product_order == 64 && full_order;
  }
};

// Verifies the product decomposition of the automorphism group of the
// 4-dimensional augmented cube in its faithful action on C_1 .. C_8.
Aq4StructureCertificate verify_aq4_structure(const PermGroup& aut);

// "C1", "C2", ... labels for cycle notation on clique indices.
std::string clique_label(std::uint32_t index);

}  // namespace aq
