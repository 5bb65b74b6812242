#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aq/aut.hpp"
#include "aq/cayley.hpp"
#include "aq/gf2.hpp"
#include "aq/perm.hpp"

// Imprimitivity structure: the nontrivial block systems of the automorphism
// group acting on the vertices.  Because the translations are transitive,
// every block through 0 is closed under + (a subspace), and its block system
// is the coset partition.

namespace aq {

// Smallest block of <gens> containing both a and b: the classes of the
// finest equivalence with a ~ b that every generator respects.
std::vector<Vertex> minimal_block(const std::vector<Permutation>& gens,
                                  Vertex a, Vertex b);

// Proper nonzero subspaces that are unions of stabilizer orbits; for a
// linear stabilizer these are exactly the blocks through 0.  Complete
// because any stabilizer-closed set is a union of orbits.
std::vector<Subspace> stabilizer_closed_subspaces(const StabilizerResult& stab,
                                                  int n);

struct BlockInfo {
  std::vector<Vertex> block;               // contains 0, ascending
  Subspace subspace;                       // the same set as a subspace
  std::vector<std::vector<Vertex>> system; // the coset partition
  std::uint64_t subgroup_order = 0;        // |block| * |stabilizer|
};

struct BlockReport {
  bool normal = false;  // which route produced the list
  std::uint64_t aut_order = 0;
  std::uint64_t stabilizer_order = 0;
  std::vector<BlockInfo> blocks;  // by size, then lexicographically
  // Block axiom rechecked for every reported block: against every group
  // element when the order fits the cap, else against the generators.
  bool axiom_verified_exhaustively = false;
  bool axiom_holds = false;
};

// All nontrivial blocks containing 0.  Uses the subspace route when the
// stabilizer is linear and the generic closure route otherwise.
BlockReport blocks_containing_e(const CayleyGraph& g,
                                const SearchCaps& caps = {});

// The generic route on its own: minimal blocks for every pair (0, v), then
// closure under joins.  Every block through 0 is the join of the minimal
// blocks of its members, so this is complete.
std::vector<std::vector<Vertex>> blocks_by_closure(const CayleyGraph& g,
                                                   const SearchCaps& caps = {});

struct CorrespondenceCertificate {
  struct Entry {
    std::vector<Vertex> block;
    std::uint64_t subgroup_order = 0;  // distinct products rho_z * s
    bool product_closed = false;       // that product set is a group
    bool orbit_matches = false;        // its orbit of 0 is the block again
  };
  std::vector<Entry> entries;

  bool pass() const {
    for (const Entry& e : entries)
      if (!e.product_closed || !e.orbit_matches) return false;
    return !entries.empty();
  }
};

// For each reported block K the products {rho_z s : z in K, s stabilizer}
// must form a subgroup of order |K| * |stabilizer| whose orbit of 0 is K.
// Only defined for a linear stabilizer; throws otherwise.
CorrespondenceCertificate verify_block_subgroup_correspondence(
    const CayleyGraph& g, const BlockReport& report,
    const SearchCaps& caps = {});

}  // namespace aq
