#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "aq/cayley.hpp"
#include "aq/gf2.hpp"
#include "aq/perm.hpp"

// Automorphism groups of Cayley graphs over GF(2)^n.  The translations
// x -> x + z already form a regular subgroup, so the whole group is the
// translations stitched to the stabilizer of the zero vertex, and the
// interesting work is finding that stabilizer and deciding whether all of it
// is linear.

namespace aq {

struct SearchCaps {
  int stabilizer_dim = 12;  // largest n the stabilizer search accepts
  std::size_t group_order = PermGroup::kDefaultOrderCap;
};

// x -> x + z on all 2^n words.
Permutation translation(int n, const GF2Vector& z);

// True iff p maps every edge of g onto an edge (a bijection doing that is an
// automorphism).
bool preserves_adjacency(const CayleyGraph& g, const Permutation& p);

struct StabilizerResult {
  PermGroup group;  // all automorphisms fixing vertex 0
  // Matrix certificate per element, aligned with group.elements(); nullopt
  // marks an element that is not linear.
  std::vector<std::optional<GF2Matrix>> linear;

  bool all_linear() const;
};

// Complete backtracking search for the automorphisms fixing 0, guided by the
// distance layers around 0 (an automorphism fixing 0 preserves them).
StabilizerResult vertex_stabilizer(const CayleyGraph& g,
                                   const SearchCaps& caps = {});

// The subgroup of the stabilizer that also fixes every neighbor of 0.
PermGroup pointwise_neighborhood_stabilizer(const CayleyGraph& g,
                                            const SearchCaps& caps = {});

struct FullAutResult {
  std::uint64_t order = 0;              // 2^n * |stabilizer|
  std::uint64_t translation_order = 0;  // 2^n
  StabilizerResult stabilizer;
  // Basis translations first, then the non-identity stabilizer elements.
  std::vector<Permutation> generators;
  bool generators_preserve_adjacency = false;
};

FullAutResult full_aut(const CayleyGraph& g, const SearchCaps& caps = {});

// All invertible matrices M with M(S) = S, i.e. the group automorphisms that
// fix the connection set.  Backtracks over basis images with incremental
// span consistency pruning, then filters M(S) = S exactly.  Sorted.
std::vector<GF2Matrix> group_automorphisms_fixing_s(const GeneratorSet& s);

struct NormalityCertificate {
  bool normal = false;
  // One matrix per stabilizer element when normal.
  std::vector<GF2Matrix> matrices;
  // A stabilizer element that is not linear, when not normal.
  std::optional<Permutation> counterexample;
};

NormalityCertificate normality_certificate(const StabilizerResult& stab);
NormalityCertificate is_normal_cayley(const CayleyGraph& g,
                                      const SearchCaps& caps = {});

// The three matrices generating the vertex stabilizer of the augmented cube
// for n >= 4: swap of the last two basis vectors, e_1 <-> all-ones, and the
// reversal e_i <-> e_{n-i} with e_n -> all-ones.
std::array<GF2Matrix, 3> augmented_stabilizer_generators(int n);

struct SemidirectCertificate {
  // g^{-1} rho_z g = rho_{g(z)} for every stabilizer element g and basis
  // vector z.
  bool conjugation = false;
  // The only translation fixing 0 is the identity.
  bool trivial_intersection = false;
  // The products rho_z * s are pairwise distinct and count 2^n * |stabilizer|
  // (checked literally when that count fits the group-order cap, otherwise
  // via the intersection argument).
  bool order_product = false;
  bool product_checked_exhaustively = false;

  bool pass() const { return conjugation && trivial_intersection && order_product; }
};

// Only meaningful when the stabilizer is linear; throws otherwise.
SemidirectCertificate verify_semidirect(const CayleyGraph& g,
                                        const FullAutResult& aut,
                                        const SearchCaps& caps = {});

}  // namespace aq
