#include "aq/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace aq {

namespace {

void check_dim(int n) {
  if (n < kMinDim || n > kMaxDim)
    throw std::invalid_argument("dimension must be between " +
                                std::to_string(kMinDim) + " and " +
                                std::to_string(kMaxDim) + ", got " +
                                std::to_string(n));
}

// Row echelon form in place; returns the rank.  Rows are raw words with the
// most significant used bit acting as column 1.
int eliminate(std::vector<std::uint32_t>& rows, int n) {
  int rank = 0;
  for (int bit = n - 1; bit >= 0 && rank < static_cast<int>(rows.size());
       --bit) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot] >> bit & 1)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && (rows[r] >> bit & 1))
        rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace

GF2Vector::GF2Vector(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  check_dim(n);
  if (bits >> n)
    throw std::invalid_argument("vector value " + std::to_string(bits) +
                                " does not fit in " + std::to_string(n) +
                                " bits");
}

GF2Vector GF2Vector::unit(int n, int i) {
  check_dim(n);
  if (i < 1 || i > n)
    throw std::invalid_argument("basis index " + std::to_string(i) +
                                " out of range for dimension " +
                                std::to_string(n));
  return GF2Vector(n, std::uint32_t{1} << (n - i));
}

GF2Vector GF2Vector::all_ones(int n) {
  check_dim(n);
  return GF2Vector(n, (std::uint32_t{1} << n) - 1);
}

GF2Vector GF2Vector::parse(const std::string& s) {
  check_dim(static_cast<int>(s.size()));
  std::uint32_t bits = 0;
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("bit string may contain only 0 and 1: \"" +
                                  s + "\"");
    bits = bits << 1 | static_cast<std::uint32_t>(c - '0');
  }
  return GF2Vector(static_cast<int>(s.size()), bits);
}

int GF2Vector::coord(int i) const {
  if (i < 1 || i > n_)
    throw std::invalid_argument("coordinate index " + std::to_string(i) +
                                " out of range for dimension " +
                                std::to_string(n_));
  return static_cast<int>(bits_ >> (n_ - i) & 1);
}

int GF2Vector::weight() const { return std::popcount(bits_); }

GF2Vector GF2Vector::operator+(const GF2Vector& o) const {
  if (n_ != o.n_)
    throw std::invalid_argument("dimension mismatch in vector sum");
  return GF2Vector(n_, bits_ ^ o.bits_);
}

bool GF2Vector::operator<(const GF2Vector& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return bits_ < o.bits_;
}

std::string GF2Vector::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i)
    if (bits_ >> (n_ - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

GF2Matrix::GF2Matrix(std::vector<GF2Vector> rows)
    : n_(static_cast<int>(rows.size())), rows_(std::move(rows)) {
  check_dim(n_);
  for (const GF2Vector& r : rows_)
    if (r.dim() != n_)
      throw std::invalid_argument("matrix rows must match the row count");
  std::vector<std::uint32_t> work;
  work.reserve(rows_.size());
  for (const GF2Vector& r : rows_) work.push_back(r.bits());
  invertible_ = eliminate(work, n_) == n_;
}

GF2Matrix GF2Matrix::identity(int n) {
  check_dim(n);
  std::vector<GF2Vector> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) rows.push_back(GF2Vector::unit(n, i));
  return GF2Matrix(std::move(rows));
}

GF2Vector GF2Matrix::apply(const GF2Vector& x) const {
  if (x.dim() != n_)
    throw std::invalid_argument("dimension mismatch in matrix apply");
  return GF2Vector(n_, apply(x.bits()));
}

std::uint32_t GF2Matrix::apply(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (int i = 0; i < n_; ++i)
    if (x >> (n_ - 1 - i) & 1) acc ^= rows_[static_cast<std::size_t>(i)].bits();
  return acc;
}

GF2Matrix GF2Matrix::inverse() const {
  if (!invertible_) throw std::domain_error("matrix is singular");
  // Gauss-Jordan on rows augmented with the identity.
  std::vector<std::uint32_t> a, inv;
  for (const GF2Vector& r : rows_) a.push_back(r.bits());
  for (int i = 1; i <= n_; ++i) inv.push_back(std::uint32_t{1} << (n_ - i));
  int rank = 0;
  for (int bit = n_ - 1; bit >= 0; --bit) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < a.size() && !(a[pivot] >> bit & 1)) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    std::swap(inv[rank], inv[pivot]);
    for (std::size_t r = 0; r < a.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && (a[r] >> bit & 1)) {
        a[r] ^= a[static_cast<std::size_t>(rank)];
        inv[r] ^= inv[static_cast<std::size_t>(rank)];
      }
    ++rank;
  }
  // After full elimination row i of `a` is e_{i+1}, so `inv` holds the
  // images of the basis under the inverse map.
  std::vector<GF2Vector> rows;
  rows.reserve(inv.size());
  for (std::uint32_t w : inv) rows.push_back(GF2Vector(n_, w));
  return GF2Matrix(std::move(rows));
}

bool GF2Matrix::operator==(const GF2Matrix& o) const {
  return n_ == o.n_ && rows_ == o.rows_;
}

bool GF2Matrix::operator<(const GF2Matrix& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return rows_ < o.rows_;
}

std::string GF2Matrix::str() const {
  std::string s;
  for (const GF2Vector& r : rows_) {
    if (!s.empty()) s += '/';
    s += r.str();
  }
  return s;
}

GF2Matrix compose(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch in matrix composition");
  std::vector<GF2Vector> rows;
  rows.reserve(static_cast<std::size_t>(a.dim()));
  for (const GF2Vector& r : a.rows()) rows.push_back(b.apply(r));
  return GF2Matrix(std::move(rows));
}

Subspace::Subspace(int n, const std::vector<GF2Vector>& vs) : n_(n) {
  check_dim(n);
  std::vector<std::uint32_t> work;
  work.reserve(vs.size());
  for (const GF2Vector& v : vs) {
    if (v.dim() != n)
      throw std::invalid_argument("span vectors must share the dimension");
    work.push_back(v.bits());
  }
  int rank = eliminate(work, n);
  work.resize(static_cast<std::size_t>(rank));
  basis_.reserve(work.size());
  for (std::uint32_t w : work) basis_.push_back(GF2Vector(n, w));
}

Subspace::Subspace(int n, const std::vector<std::uint32_t>& words)
    : Subspace(n, [&] {
        std::vector<GF2Vector> vs;
        vs.reserve(words.size());
        for (std::uint32_t w : words) vs.push_back(GF2Vector(n, w));
        return vs;
      }()) {}

bool Subspace::contains(const GF2Vector& v) const {
  if (v.dim() != n_)
    throw std::invalid_argument("dimension mismatch in subspace membership");
  return contains(v.bits());
}

bool Subspace::contains(std::uint32_t word) const {
  for (const GF2Vector& b : basis_) {
    std::uint32_t lead = std::bit_floor(b.bits());
    if (word & lead) word ^= b.bits();
  }
  return word == 0;
}

std::vector<std::uint32_t> Subspace::members() const {
  std::vector<std::uint32_t> out{0};
  for (const GF2Vector& b : basis_) {
    std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) out.push_back(out[i] ^ b.bits());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Subspace::operator==(const Subspace& o) const {
  // The reduced echelon basis is canonical, so equality of spans is equality
  // of bases.
  return n_ == o.n_ && basis_ == o.basis_;
}

bool is_subspace(const std::vector<GF2Vector>& set) {
  if (set.empty()) return false;
  int n = set.front().dim();
  std::vector<std::uint32_t> words;
  words.reserve(set.size());
  for (const GF2Vector& v : set) {
    if (v.dim() != n)
      throw std::invalid_argument("subspace test needs one fixed dimension");
    words.push_back(v.bits());
  }
  return is_subspace(n, words);
}

bool is_subspace(int n, const std::vector<std::uint32_t>& set) {
  check_dim(n);
  if (set.empty()) return false;
  std::unordered_set<std::uint32_t> have;
  for (std::uint32_t w : set) {
    if (w >> n)
      throw std::invalid_argument("subspace test saw an out-of-range word");
    have.insert(w);
  }
  if (!have.count(0)) return false;
  for (std::uint32_t a : have)
    for (std::uint32_t b : have)
      if (!have.count(a ^ b)) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> coset_partition(const Subspace& s) {
  std::vector<std::uint32_t> base = s.members();
  std::size_t total = std::size_t{1} << s.ambient_dim();
  std::vector<char> seen(total, 0);
  std::vector<std::vector<std::uint32_t>> cosets;
  for (std::uint32_t rep = 0; rep < total; ++rep) {
    if (seen[rep]) continue;
    std::vector<std::uint32_t> coset;
    coset.reserve(base.size());
    for (std::uint32_t m : base) {
      std::uint32_t w = rep ^ m;
      seen[w] = 1;
      coset.push_back(w);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

}  // namespace aq
