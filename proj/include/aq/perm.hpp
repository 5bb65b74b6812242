#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aq/cayley.hpp"
#include "aq/gf2.hpp"

// Finite permutation groups, enumerated in full.  Everything here is meant
// for groups of a few thousand elements at most; there is deliberately no
// stabilizer-chain machinery.

namespace aq {

// Thrown when an enumeration grows past its cap, so callers can tell
// "unexpectedly large group" apart from bad input.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Bijection of {0, ..., d-1}.  Composition reads left to right:
// compose(a, b) means "a, then b", so p^(ab) = (p^a)^b.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t apply(std::uint32_t p) const { return images_[p]; }
  std::uint32_t operator()(std::uint32_t p) const { return images_[p]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;  // lcm of cycle lengths

  // Cycle notation with fixed points suppressed, "()" for the identity.
  // Only for degree <= 64; label defaults to the decimal point number.
  std::string cycles(
      const std::function<std::string(std::uint32_t)>& label = {}) const;

  bool operator==(const Permutation& o) const = default;
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<std::uint32_t> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);

// The permutation x -> Mx of the whole word space GF(2)^n.
Permutation matrix_permutation(const GF2Matrix& m);

// A group given by its full, sorted element list.  Construction enumerates
// the closure of the generators breadth-first and fails loudly past the cap.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 8192;

  static PermGroup closure(std::vector<Permutation> gens,
                           std::size_t cap = kDefaultOrderCap);
  // Wraps a set that is already expected to be a group; verified by running
  // the closure and checking nothing new appears.
  static PermGroup from_elements(std::vector<Permutation> elems,
                                 std::size_t cap = kDefaultOrderCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<Permutation>& elements() const { return elems_; }
  bool contains(const Permutation& p) const;

  std::vector<std::uint32_t> orbit(std::uint32_t point) const;  // ascending
  // All orbits, ordered by least point.
  std::vector<std::vector<std::uint32_t>> orbits() const;

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> gens,
            std::vector<Permutation> elems);

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;  // sorted by image array
};

struct Fingerprint {
  std::uint64_t order = 0;
  bool abelian = false;
  std::map<std::uint64_t, std::uint64_t> order_histogram;
  std::uint64_t center_order = 0;

  bool operator==(const Fingerprint&) const = default;
  std::string str() const;
};

// Order, commutativity, element-order histogram, center order.  Quadratic in
// the group order, so capped at 512 elements.
Fingerprint fingerprint(const PermGroup& g);

struct GroupType {
  enum class Kind {
    Trivial,
    Cyclic,
    ElementaryAbelian,
    Dihedral,
    Symmetric,
    DirectProduct,
    Unrecognized,
  };

  Kind kind = Kind::Unrecognized;
  // Cyclic: the order.  ElementaryAbelian: the rank k of (C_2)^k.
  // Dihedral: the group order (D8 = the 8 symmetries of a square).
  // Symmetric: the k of S_k.
  int parameter = 0;
  std::vector<GroupType> factors;    // DirectProduct only
  std::optional<Fingerprint> fp;     // evidence carried by Unrecognized

  static GroupType trivial();
  static GroupType cyclic(int order);
  static GroupType elementary_abelian(int rank);
  static GroupType dihedral(int order);
  static GroupType symmetric(int k);
  static GroupType direct_product(std::vector<GroupType> factors);

  std::string str() const;  // "D8", "D8 x C2", "S4", "C2", "C2^3", ...
  bool operator==(const GroupType& o) const;
};

// Identify small groups by fingerprint plus a structural dihedral test
// (index-2 cyclic subgroup with only involutions outside).  Anything not in
// the catalogue comes back Unrecognized with the fingerprint attached.
GroupType recognize(const PermGroup& g);

struct InducedAction {
  PermGroup image;  // on set indices
  std::uint64_t kernel_order = 0;
  bool faithful() const { return kernel_order == 1; }
};

// Action of g on a list of pairwise distinct point sets.  Every element of g
// must map each listed set onto some listed set; otherwise this throws.
InducedAction induced_action(const PermGroup& g,
                             const std::vector<std::vector<std::uint32_t>>& sets);

// If p (degree 2^n) agrees everywhere with x -> Mx for the matrix M whose
// rows are the images of the basis, return M; otherwise nullopt.  A
// permutation moving 0 is never linear.
std::optional<GF2Matrix> permutation_is_linear(const Permutation& p, int n);

// Every automorphism of a graph on at most 16 vertices, found by
// backtracking over images with degree and adjacency pruning.
PermGroup graph_automorphisms(const SmallGraph& g);

}  // namespace aq
