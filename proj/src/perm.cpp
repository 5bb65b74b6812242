#include "aq/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace aq {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  if (images_.empty())
    throw std::invalid_argument("permutation needs at least one point");
  std::vector<char> seen(images_.size(), 0);
  for (std::uint32_t p : images_) {
    if (p >= images_.size() || seen[p])
      throw std::invalid_argument("image array is not a bijection");
    seen[p] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < images_.size(); ++p)
    if (images_[p] != p) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p)
    inv[images_[p]] = static_cast<std::uint32_t>(p);
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t ord = 1;
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (seen[p]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t q = static_cast<std::uint32_t>(p); !seen[q];
         q = images_[q]) {
      seen[q] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::cycles(
    const std::function<std::string(std::uint32_t)>& label) const {
  if (degree() > 64)
    throw std::invalid_argument("cycle notation is limited to 64 points");
  auto name = [&](std::uint32_t p) {
    return label ? label(p) : std::to_string(p);
  };
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (seen[p] || images_[p] == p) {
      seen[p] = 1;
      continue;
    }
    out += '(';
    bool first = true;
    for (std::uint32_t q = static_cast<std::uint32_t>(p); !seen[q];
         q = images_[q]) {
      seen[q] = 1;
      if (!first) out += ' ';
      out += name(q);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in composition");
  std::vector<std::uint32_t> images(a.degree());
  for (std::size_t p = 0; p < a.degree(); ++p)
    images[p] = b.apply(a.apply(static_cast<std::uint32_t>(p)));
  return Permutation(std::move(images));
}

Permutation matrix_permutation(const GF2Matrix& m) {
  if (!m.invertible())
    throw std::invalid_argument(
        "a singular matrix does not permute the word space");
  std::size_t count = std::size_t{1} << m.dim();
  std::vector<std::uint32_t> images(count);
  for (std::uint32_t x = 0; x < count; ++x) images[x] = m.apply(x);
  return Permutation(std::move(images));
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens,
                     std::vector<Permutation> elems)
    : degree_(degree), gens_(std::move(gens)), elems_(std::move(elems)) {}

PermGroup PermGroup::closure(std::vector<Permutation> gens, std::size_t cap) {
  if (gens.empty())
    throw std::invalid_argument(
        "closure needs at least one permutation to fix the degree");
  std::size_t degree = gens.front().degree();
  for (const Permutation& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generators must share one degree");
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> queue{Permutation::identity(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Permutation& g : gens) {
      Permutation next = compose(queue[i], g);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw cap_exceeded("group order exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  std::vector<Permutation> elems(seen.begin(), seen.end());
  return PermGroup(degree, std::move(gens), std::move(elems));
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elems,
                                   std::size_t cap) {
  if (elems.empty())
    throw std::invalid_argument("a group has at least the identity");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  PermGroup closed = closure(elems, cap);
  if (closed.order() != elems.size())
    throw std::invalid_argument("element set is not closed under composition");
  return closed;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t point) const {
  if (point >= degree_) throw std::invalid_argument("point out of range");
  std::vector<char> seen(degree_, 0);
  seen[point] = 1;
  std::vector<std::uint32_t> out{point}, frontier{point};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t p : frontier)
      for (const Permutation& g : gens_) {
        std::uint32_t q = g.apply(p);
        if (!seen[q]) {
          seen[q] = 1;
          out.push_back(q);
          next.push_back(q);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> PermGroup::orbits() const {
  std::vector<char> seen(degree_, 0);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    std::vector<std::uint32_t> orb = orbit(p);
    for (std::uint32_t q : orb) seen[q] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

std::string Fingerprint::str() const {
  std::string s = "order=" + std::to_string(order) +
                  " abelian=" + (abelian ? "yes" : "no") +
                  " center=" + std::to_string(center_order) + " orders=";
  bool first = true;
  for (const auto& [ord, count] : order_histogram) {
    if (!first) s += ' ';
    s += std::to_string(ord) + "^" + std::to_string(count);
    first = false;
  }
  return s;
}

namespace {

bool commute(const Permutation& a, const Permutation& b) {
  for (std::size_t p = 0; p < a.degree(); ++p)
    if (b.apply(a.apply(static_cast<std::uint32_t>(p))) !=
        a.apply(b.apply(static_cast<std::uint32_t>(p))))
      return false;
  return true;
}

}  // namespace

Fingerprint fingerprint(const PermGroup& g) {
  if (g.order() > 512)
    throw cap_exceeded("fingerprint is quadratic in the order; cap is 512");
  Fingerprint fp;
  fp.order = g.order();
  for (const Permutation& e : g.elements()) ++fp.order_histogram[e.order()];
  // An element is central iff it commutes with every generator.
  for (const Permutation& e : g.elements()) {
    bool central = true;
    for (const Permutation& gen : g.generators())
      if (!commute(e, gen)) {
        central = false;
        break;
      }
    if (central) ++fp.center_order;
  }
  fp.abelian = fp.center_order == fp.order;
  return fp;
}

GroupType GroupType::trivial() { return {Kind::Trivial, 1, {}, {}}; }
GroupType GroupType::cyclic(int order) { return {Kind::Cyclic, order, {}, {}}; }
GroupType GroupType::elementary_abelian(int rank) {
  return {Kind::ElementaryAbelian, rank, {}, {}};
}
GroupType GroupType::dihedral(int order) {
  return {Kind::Dihedral, order, {}, {}};
}
GroupType GroupType::symmetric(int k) { return {Kind::Symmetric, k, {}, {}}; }
GroupType GroupType::direct_product(std::vector<GroupType> factors) {
  return {Kind::DirectProduct, 0, std::move(factors), {}};
}

std::string GroupType::str() const {
  switch (kind) {
    case Kind::Trivial:
      return "1";
    case Kind::Cyclic:
      return "C" + std::to_string(parameter);
    case Kind::ElementaryAbelian:
      return parameter == 1 ? "C2" : "C2^" + std::to_string(parameter);
    case Kind::Dihedral:
      return "D" + std::to_string(parameter);
    case Kind::Symmetric:
      return "S" + std::to_string(parameter);
    case Kind::DirectProduct: {
      std::string s;
      for (const GroupType& f : factors) {
        if (!s.empty()) s += " x ";
        s += f.str();
      }
      return s;
    }
    case Kind::Unrecognized:
      return "unrecognized(" + (fp ? fp->str() : std::string("no data")) + ")";
  }
  return "?";
}

bool GroupType::operator==(const GroupType& o) const {
  return kind == o.kind && parameter == o.parameter && factors == o.factors &&
         fp == o.fp;
}

GroupType recognize(const PermGroup& g) {
  Fingerprint fp = fingerprint(g);
  const std::uint64_t n = fp.order;
  if (n == 1) return GroupType::trivial();
  if (fp.order_histogram.count(n))
    return GroupType::cyclic(static_cast<int>(n));
  if (fp.abelian) {
    auto it = fp.order_histogram.find(2);
    if (it != fp.order_histogram.end() && it->second == n - 1) {
      int rank = 0;
      while ((std::uint64_t{1} << rank) < n) ++rank;
      return GroupType::elementary_abelian(rank);
    }
    GroupType t;
    t.fp = fp;
    return t;
  }
  // Dihedral test: some element r of order n/2 whose powers form an index-2
  // subgroup with nothing but involutions outside.  In a dihedral group any
  // element of rotation order generates the rotation subgroup, so checking
  // the first candidate settles it.
  if (n % 2 == 0 && n >= 6) {
    const std::uint64_t half = n / 2;
    const Permutation* r = nullptr;
    for (const Permutation& e : g.elements())
      if (e.order() == half) {
        r = &e;
        break;
      }
    if (r) {
      std::set<Permutation> powers;
      Permutation acc = Permutation::identity(g.degree());
      for (std::uint64_t i = 0; i < half; ++i) {
        powers.insert(acc);
        acc = compose(acc, *r);
      }
      bool outside_involutions = true;
      for (const Permutation& e : g.elements())
        if (!powers.count(e) && e.order() != 2) {
          outside_involutions = false;
          break;
        }
      if (outside_involutions) return GroupType::dihedral(static_cast<int>(n));
    }
  }
  if (n == 16 && fp.center_order == 4) {
    auto it = fp.order_histogram.find(2);
    if (it != fp.order_histogram.end() && it->second == 11)
      return GroupType::direct_product(
          {GroupType::dihedral(8), GroupType::cyclic(2)});
  }
  if (n == 24) {
    std::map<std::uint64_t, std::uint64_t> s4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    if (fp.order_histogram == s4) return GroupType::symmetric(4);
  }
  GroupType t;
  t.fp = fp;
  return t;
}

InducedAction induced_action(
    const PermGroup& g, const std::vector<std::vector<std::uint32_t>>& sets) {
  if (sets.empty())
    throw std::invalid_argument("induced action needs at least one set");
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> canon;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<std::uint32_t> s = sets[i];
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("listed sets must not repeat points");
    for (std::uint32_t p : s)
      if (p >= g.degree())
        throw std::invalid_argument("set point out of range");
    if (!index.emplace(s, static_cast<std::uint32_t>(i)).second)
      throw std::invalid_argument("listed sets must be pairwise distinct");
    canon.push_back(std::move(s));
  }
  auto induce = [&](const Permutation& e) {
    std::vector<std::uint32_t> images(sets.size());
    for (std::size_t i = 0; i < canon.size(); ++i) {
      std::vector<std::uint32_t> img;
      img.reserve(canon[i].size());
      for (std::uint32_t p : canon[i]) img.push_back(e.apply(p));
      std::sort(img.begin(), img.end());
      auto it = index.find(img);
      if (it == index.end())
        throw std::invalid_argument(
            "group does not permute the listed sets");
      images[i] = it->second;
    }
    return Permutation(std::move(images));
  };
  // Verify every element maps listed sets onto listed sets...
  for (const Permutation& e : g.elements()) induce(e);
  // ...then build the image from the generator images (the image of a
  // generated group is generated by the images).
  std::vector<Permutation> gen_images;
  gen_images.reserve(g.generators().size());
  for (const Permutation& gen : g.generators()) gen_images.push_back(induce(gen));
  PermGroup image = PermGroup::closure(std::move(gen_images), g.order());
  std::uint64_t kernel = g.order() / image.order();
  return InducedAction{std::move(image), kernel};
}

std::optional<GF2Matrix> permutation_is_linear(const Permutation& p, int n) {
  if (n < kMinDim || n > kMaxDim ||
      p.degree() != (std::size_t{1} << n))
    throw std::invalid_argument("degree is not 2^n for the given n");
  if (p.apply(0) != 0) return std::nullopt;
  std::vector<GF2Vector> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    rows.push_back(GF2Vector(n, p.apply(GF2Vector::unit(n, i).bits())));
  GF2Matrix m(std::move(rows));
  for (std::uint32_t x = 0; x < p.degree(); ++x)
    if (m.apply(x) != p.apply(x)) return std::nullopt;
  return m;
}

namespace {

struct AutSearch {
  const SmallGraph& g;
  std::size_t k;
  std::vector<int> degree;
  std::vector<std::uint32_t> image;
  std::uint64_t used = 0;
  std::vector<Permutation> found;

  explicit AutSearch(const SmallGraph& graph)
      : g(graph), k(graph.size()), degree(k), image(k) {
    for (std::size_t i = 0; i < k; ++i) degree[i] = graph.degree(i);
  }

  void run(std::size_t pos) {
    if (pos == k) {
      found.push_back(Permutation(image));
      return;
    }
    for (std::uint32_t w = 0; w < k; ++w) {
      if (used >> w & 1) continue;
      if (degree[w] != degree[pos]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < pos; ++u)
        if (g.adjacent(u, pos) != g.adjacent(image[u], w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[pos] = w;
      used |= std::uint64_t{1} << w;
      run(pos + 1);
      used &= ~(std::uint64_t{1} << w);
    }
  }
};

}  // namespace

PermGroup graph_automorphisms(const SmallGraph& g) {
  if (g.size() > 16)
    throw std::invalid_argument(
        "exhaustive automorphism search is limited to 16 vertices");
  AutSearch search(g);
  search.run(0);
  return PermGroup::from_elements(std::move(search.found));
}

}  // namespace aq
