#include "aq/aut.hpp"

#include <algorithm>
#include <unordered_set>

namespace aq {

Permutation translation(int n, const GF2Vector& z) {
  if (z.dim() != n) throw std::invalid_argument("translation dimension mismatch");
  std::size_t count = std::size_t{1} << n;
  std::vector<std::uint32_t> images(count);
  for (std::uint32_t x = 0; x < count; ++x) images[x] = x ^ z.bits();
  return Permutation(std::move(images));
}

bool preserves_adjacency(const CayleyGraph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count())
    throw std::invalid_argument("permutation degree does not match the graph");
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (const GF2Vector& s : g.generators().members)
      if (!g.adjacent(p.apply(u), p.apply(u ^ s.bits()))) return false;
  return true;
}

namespace {

// Backtracking over vertex images in breadth-first layer order.  A candidate
// image must sit in the same layer, carry the same (down-degree, in-layer
// degree) signature, and stay adjacency-consistent with everything already
// assigned; vertices of an unreachable component get their own layer key.
// Completeness: every vertex is eventually assigned and every assignment is
// checked against all earlier ones, so the leaves are exactly the
// automorphisms fixing 0.
struct StabilizerSearch {
  const CayleyGraph& g;
  std::size_t count;
  std::vector<int> layer;                  // -1 for unreachable
  std::vector<std::uint64_t> signature;    // packed (layer, down, within)
  std::vector<Vertex> order;               // processing order
  std::vector<int> anchor;                 // earlier-assigned neighbor, or -1
  std::vector<std::int64_t> image;
  std::vector<char> used;
  std::vector<Permutation> found;
  std::size_t cap;

  StabilizerSearch(const CayleyGraph& graph, std::size_t order_cap)
      : g(graph),
        count(graph.vertex_count()),
        layer(count, -1),
        signature(count),
        image(count, -1),
        used(count, 0),
        cap(order_cap) {
    auto layers = distance_partition(g, 0);
    for (std::size_t d = 0; d < layers.size(); ++d)
      for (Vertex v : layers[d]) layer[v] = static_cast<int>(d);

    for (Vertex v = 0; v < count; ++v) {
      std::uint64_t down = 0, within = 0;
      for (Vertex w : g.neighbors(v)) {
        if (layer[w] == layer[v]) ++within;
        if (layer[v] > 0 && layer[w] == layer[v] - 1) ++down;
      }
      std::uint64_t key =
          layer[v] < 0 ? std::uint64_t{1} << 62
                       : static_cast<std::uint64_t>(layer[v]);
      signature[v] = key << 32 | down << 16 | within;
    }

    order.reserve(count);
    for (Vertex v = 0; v < count; ++v) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      std::uint64_t ka = signature[a] >> 32, kb = signature[b] >> 32;
      if (ka != kb) return ka < kb;
      return a < b;
    });

    // For each position, a neighbor already assigned when that position is
    // reached; its image then confines the candidates to a neighbor list.
    std::vector<std::size_t> position(count);
    for (std::size_t k = 0; k < count; ++k) position[order[k]] = k;
    anchor.assign(count, -1);
    for (std::size_t k = 1; k < count; ++k) {
      Vertex v = order[k];
      for (Vertex w : g.neighbors(v))
        if (position[w] < k &&
            (anchor[k] < 0 || position[w] < position[static_cast<std::size_t>(
                                  anchor[k])])) {
          anchor[k] = static_cast<int>(w);
        }
    }
  }

  void run(std::size_t pos) {
    if (pos == count) {
      std::vector<std::uint32_t> images(count);
      for (Vertex v = 0; v < count; ++v)
        images[v] = static_cast<std::uint32_t>(image[v]);
      found.push_back(Permutation(std::move(images)));
      if (found.size() > cap)
        throw cap_exceeded("stabilizer order exceeds cap " +
                           std::to_string(cap));
      return;
    }
    Vertex v = order[pos];
    auto try_candidate = [&](Vertex w) {
      if (used[w] || signature[w] != signature[v]) return;
      for (std::size_t k = 0; k < pos; ++k) {
        Vertex u = order[k];
        if (g.adjacent(u, v) !=
            g.adjacent(static_cast<Vertex>(image[u]), w))
          return;
      }
      image[v] = w;
      used[w] = 1;
      run(pos + 1);
      used[w] = 0;
      image[v] = -1;
    };
    if (anchor[pos] >= 0) {
      Vertex a = static_cast<Vertex>(anchor[pos]);
      for (Vertex w : g.neighbors(static_cast<Vertex>(image[a])))
        try_candidate(w);
    } else {
      for (Vertex w = 0; w < count; ++w) try_candidate(w);
    }
  }
};

}  // namespace

StabilizerResult vertex_stabilizer(const CayleyGraph& g,
                                   const SearchCaps& caps) {
  if (g.dim() > caps.stabilizer_dim)
    throw cap_exceeded("stabilizer search capped at n = " +
                       std::to_string(caps.stabilizer_dim));
  StabilizerSearch search(g, caps.group_order);
  search.image[0] = 0;
  search.used[0] = 1;
  search.run(1);
  for (const Permutation& p : search.found)
    if (!preserves_adjacency(g, p))
      throw std::logic_error("stabilizer search emitted a non-automorphism");
  PermGroup group = PermGroup::from_elements(std::move(search.found),
                                             caps.group_order);
  StabilizerResult result{std::move(group), {}};
  result.linear.reserve(result.group.order());
  for (const Permutation& p : result.group.elements())
    result.linear.push_back(permutation_is_linear(p, g.dim()));
  return result;
}

bool StabilizerResult::all_linear() const {
  for (const auto& m : linear)
    if (!m) return false;
  return true;
}

PermGroup pointwise_neighborhood_stabilizer(const CayleyGraph& g,
                                            const SearchCaps& caps) {
  StabilizerResult stab = vertex_stabilizer(g, caps);
  std::vector<Permutation> fixing;
  for (const Permutation& p : stab.group.elements()) {
    bool fixes = true;
    for (const GF2Vector& s : g.generators().members)
      if (p.apply(s.bits()) != s.bits()) {
        fixes = false;
        break;
      }
    if (fixes) fixing.push_back(p);
  }
  return PermGroup::from_elements(std::move(fixing), caps.group_order);
}

FullAutResult full_aut(const CayleyGraph& g, const SearchCaps& caps) {
  FullAutResult out{0, 0, vertex_stabilizer(g, caps), {}, false};
  out.translation_order = std::uint64_t{1} << g.dim();
  out.order = out.translation_order * out.stabilizer.group.order();
  for (int i = 1; i <= g.dim(); ++i)
    out.generators.push_back(translation(g.dim(), GF2Vector::unit(g.dim(), i)));
  for (const Permutation& p : out.stabilizer.group.elements())
    if (!p.is_identity()) out.generators.push_back(p);
  out.generators_preserve_adjacency = true;
  for (const Permutation& p : out.generators)
    if (!preserves_adjacency(g, p)) out.generators_preserve_adjacency = false;
  return out;
}

namespace {

// Depth-first assignment of images to a basis drawn from S (extended with
// unit vectors when S does not span).  `dom` and `img` run in parallel over
// the span of the assigned basis vectors; the graph of the map stays
// S-consistent at every step, so a full assignment fixes S setwise by
// construction but is filtered exactly anyway.
struct FixerSearch {
  int n;
  std::vector<std::uint32_t> s_words;     // sorted
  std::vector<char> in_s;                 // indexed by word
  std::vector<std::uint32_t> basis;       // first s_rank from S, rest units
  std::size_t s_rank;
  std::vector<std::uint32_t> dom, img;    // parallel span enumeration
  std::vector<char> img_seen;             // membership of img span
  std::vector<std::uint32_t> chosen;
  std::vector<GF2Matrix> found;

  explicit FixerSearch(const GeneratorSet& s) : n(s.n) {
    std::size_t words = std::size_t{1} << n;
    in_s.assign(words, 0);
    for (const GF2Vector& m : s.members) {
      s_words.push_back(m.bits());
      in_s[m.bits()] = 1;
    }
    std::sort(s_words.begin(), s_words.end());

    // Greedy basis from S in ascending order, extended by unit vectors.
    Subspace span(n, std::vector<GF2Vector>{});
    std::vector<GF2Vector> picked;
    for (std::uint32_t w : s_words) {
      if (span.contains(w)) continue;
      picked.push_back(GF2Vector(n, w));
      basis.push_back(w);
      span = Subspace(n, picked);
    }
    s_rank = basis.size();
    for (int i = 1; i <= n && span.dim() < n; ++i) {
      GF2Vector e = GF2Vector::unit(n, i);
      if (span.contains(e)) continue;
      picked.push_back(e);
      basis.push_back(e.bits());
      span = Subspace(n, picked);
    }

    dom.reserve(words);
    img.reserve(words);
    img_seen.assign(words, 0);
    dom.push_back(0);
    img.push_back(0);
    img_seen[0] = 1;
  }

  void run(std::size_t level) {
    if (level == basis.size()) {
      emit();
      return;
    }
    bool constrained = level < s_rank;
    auto try_image = [&](std::uint32_t c) {
      if (img_seen[c]) return;  // dependent choice
      std::size_t half = dom.size();
      for (std::size_t i = 0; i < half; ++i)
        if (in_s[dom[i] ^ basis[level]] != in_s[img[i] ^ c]) return;
      for (std::size_t i = 0; i < half; ++i) {
        dom.push_back(dom[i] ^ basis[level]);
        img.push_back(img[i] ^ c);
        img_seen[img[i] ^ c] = 1;
      }
      chosen.push_back(c);
      run(level + 1);
      chosen.pop_back();
      for (std::size_t i = half; i < dom.size(); ++i) img_seen[img[i]] = 0;
      dom.resize(half);
      img.resize(half);
    };
    if (constrained) {
      for (std::uint32_t c : s_words) try_image(c);
    } else {
      std::size_t words = std::size_t{1} << n;
      for (std::uint32_t c = 0; c < words; ++c) try_image(c);
    }
  }

  void emit() {
    // Solve for the images of the unit vectors: each e_j is a combination of
    // basis vectors, found by elimination over the recorded span.
    std::vector<GF2Vector> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
      std::uint32_t e = GF2Vector::unit(n, j).bits();
      // dom holds every span element; locate e and take its image.
      std::uint32_t img_of_e = 0;
      bool ok = false;
      for (std::size_t i = 0; i < dom.size(); ++i)
        if (dom[i] == e) {
          img_of_e = img[i];
          ok = true;
          break;
        }
      if (!ok) throw std::logic_error("basis does not span the word space");
      rows.push_back(GF2Vector(n, img_of_e));
    }
    GF2Matrix m(std::move(rows));
    if (!m.invertible()) return;
    for (std::uint32_t w : s_words)
      if (!in_s[m.apply(w)]) return;
    found.push_back(std::move(m));
  }
};

}  // namespace

std::vector<GF2Matrix> group_automorphisms_fixing_s(const GeneratorSet& s) {
  if (s.members.empty())
    throw std::invalid_argument("empty connection set has no finite interest");
  FixerSearch search(s);
  search.run(0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

NormalityCertificate normality_certificate(const StabilizerResult& stab) {
  NormalityCertificate cert;
  cert.normal = true;
  for (std::size_t i = 0; i < stab.group.order(); ++i) {
    if (stab.linear[i]) {
      cert.matrices.push_back(*stab.linear[i]);
    } else {
      cert.normal = false;
      if (!cert.counterexample)
        cert.counterexample = stab.group.elements()[i];
    }
  }
  if (!cert.normal) cert.matrices.clear();
  return cert;
}

NormalityCertificate is_normal_cayley(const CayleyGraph& g,
                                      const SearchCaps& caps) {
  return normality_certificate(vertex_stabilizer(g, caps));
}

std::array<GF2Matrix, 3> augmented_stabilizer_generators(int n) {
  if (n < 4)
    throw std::invalid_argument(
        "the three standard stabilizer generators need n >= 4");
  std::vector<GF2Vector> f1, f2, f3;
  for (int i = 1; i <= n; ++i) {
    int j = i == n - 1 ? n : i == n ? n - 1 : i;
    f1.push_back(GF2Vector::unit(n, j));
    f2.push_back(i == 1 ? GF2Vector::all_ones(n) : GF2Vector::unit(n, i));
    f3.push_back(i == n ? GF2Vector::all_ones(n) : GF2Vector::unit(n, n - i));
  }
  return {GF2Matrix(std::move(f1)), GF2Matrix(std::move(f2)),
          GF2Matrix(std::move(f3))};
}

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

SemidirectCertificate verify_semidirect(const CayleyGraph& g,
                                        const FullAutResult& aut,
                                        const SearchCaps& caps) {
  if (!aut.stabilizer.all_linear())
    throw std::invalid_argument(
        "semidirect certificate needs a linear stabilizer");
  const int n = g.dim();
  SemidirectCertificate cert;

  cert.conjugation = true;
  for (const Permutation& s : aut.stabilizer.group.elements()) {
    Permutation s_inv = s.inverse();
    for (int i = 1; i <= n; ++i) {
      GF2Vector z = GF2Vector::unit(n, i);
      Permutation lhs = compose(compose(s_inv, translation(n, z)), s);
      Permutation rhs = translation(n, GF2Vector(n, s.apply(z.bits())));
      if (!(lhs == rhs)) cert.conjugation = false;
    }
  }

  // A translation in the stabilizer fixes 0, forcing z = 0; verify that the
  // stabilizer contains exactly one translation, the identity.
  std::size_t translations_found = 0;
  for (const Permutation& s : aut.stabilizer.group.elements()) {
    std::uint32_t z = s.apply(0);
    bool is_translation = true;
    for (std::uint32_t x = 0; x < s.degree(); ++x)
      if (s.apply(x) != (x ^ z)) {
        is_translation = false;
        break;
      }
    if (is_translation) ++translations_found;
  }
  cert.trivial_intersection = translations_found == 1;

  std::uint64_t expected =
      aut.translation_order * aut.stabilizer.group.order();
  if (expected <= caps.group_order) {
    std::unordered_set<Permutation, PermHash> products;
    for (std::uint32_t z = 0; z < g.vertex_count(); ++z) {
      Permutation rho = translation(n, GF2Vector(n, z));
      for (const Permutation& s : aut.stabilizer.group.elements())
        products.insert(compose(rho, s));
    }
    cert.order_product = products.size() == expected && expected == aut.order;
    cert.product_checked_exhaustively = true;
  } else {
    cert.order_product = cert.trivial_intersection && expected == aut.order;
    cert.product_checked_exhaustively = false;
  }
  return cert;
}

}  // namespace aq
