#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Exact linear algebra over GF(2), with vectors packed into machine words.
// Dimensions are capped at 24 so a vector always fits one word and a whole
// space (2^n points) stays cheap to enumerate.
//
// Bit convention: the coordinate string x_1 x_2 ... x_n is read with x_1 most
// significant, so a string is just the binary rendering of the stored word
// ("0011" <-> 3).  Coordinate x_i sits at bit n-i and the standard basis
// vector e_i is 1 << (n-i).

namespace aq {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 24;

class GF2Vector {
 public:
  GF2Vector(int n, std::uint32_t bits);

  static GF2Vector zero(int n) { return GF2Vector(n, 0); }
  static GF2Vector unit(int n, int i);  // e_i, i is 1-based
  static GF2Vector all_ones(int n);
  static GF2Vector parse(const std::string& s);  // dimension = string length

  int dim() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  int coord(int i) const;  // x_i, 1-based
  int weight() const;
  bool is_zero() const { return bits_ == 0; }

  GF2Vector operator+(const GF2Vector& o) const;  // componentwise XOR

  bool operator==(const GF2Vector& o) const = default;
  bool operator<(const GF2Vector& o) const;  // by dimension, then value

  std::string str() const;

 private:
  int n_;
  std::uint32_t bits_;
};

// Linear map of GF(2)^n described by the images of the basis: row i is where
// e_{i+1} goes, and apply() sends x to the XOR of the rows selected by the
// coordinates of x.  Invertibility is decided once, at construction.
class GF2Matrix {
 public:
  explicit GF2Matrix(std::vector<GF2Vector> rows);

  static GF2Matrix identity(int n);

  int dim() const { return n_; }
  const GF2Vector& row(int i) const { return rows_[i]; }  // 0-based
  const std::vector<GF2Vector>& rows() const { return rows_; }

  GF2Vector apply(const GF2Vector& x) const;
  std::uint32_t apply(std::uint32_t x) const;  // same map on raw words

  bool invertible() const { return invertible_; }
  GF2Matrix inverse() const;  // throws std::domain_error when singular

  bool operator==(const GF2Matrix& o) const;
  bool operator<(const GF2Matrix& o) const;  // lexicographic on row values

  std::string str() const;  // rows joined by '/'

 private:
  int n_;
  std::vector<GF2Vector> rows_;
  bool invertible_;
};

// apply a, then b (matching the left-to-right composition of permutations)
GF2Matrix compose(const GF2Matrix& a, const GF2Matrix& b);

class Subspace {
 public:
  // Span of the given vectors inside GF(2)^n; vs may be empty (zero space).
  Subspace(int n, const std::vector<GF2Vector>& vs);
  Subspace(int n, const std::vector<std::uint32_t>& words);

  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  // Reduced echelon basis, pivot bits strictly decreasing.
  const std::vector<GF2Vector>& basis() const { return basis_; }

  bool contains(const GF2Vector& v) const;
  bool contains(std::uint32_t word) const;

  std::uint32_t size() const { return std::uint32_t{1} << dim(); }
  std::vector<std::uint32_t> members() const;  // ascending

  bool operator==(const Subspace& o) const;

 private:
  int n_;
  std::vector<GF2Vector> basis_;
};

// True iff the set (all vectors of one dimension) literally is a subspace:
// nonempty, contains zero, closed under +.
bool is_subspace(const std::vector<GF2Vector>& set);
bool is_subspace(int n, const std::vector<std::uint32_t>& set);

// All cosets w + s, each sorted ascending, ordered by minimal element.  The
// first coset is s itself.
std::vector<std::vector<std::uint32_t>> coset_partition(const Subspace& s);

}  // namespace aq
