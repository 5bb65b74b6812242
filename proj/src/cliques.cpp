#include "aq/cliques.hpp"

#include "aq/aut.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace aq {

namespace {

// Bron-Kerbosch over dynamic bitsets.  The graphs here are sparse (degree
// 2n-1 at most), so candidate sets collapse after the first pivot choice.
struct CliqueSearch {
  const CayleyGraph& g;
  std::size_t count, words;
  std::vector<std::vector<std::uint64_t>> adj;
  std::vector<Vertex> current;
  std::vector<Clique> maximal;

  explicit CliqueSearch(const CayleyGraph& graph)
      : g(graph), count(graph.vertex_count()), words((count + 63) / 64) {
    adj.assign(count, std::vector<std::uint64_t>(words, 0));
    for (Vertex v = 0; v < count; ++v)
      for (Vertex w : g.neighbors(v)) adj[v][w >> 6] |= std::uint64_t{1} << (w & 63);
  }

  static bool empty(const std::vector<std::uint64_t>& s) {
    for (std::uint64_t w : s)
      if (w) return false;
    return true;
  }

  static int popcount(const std::vector<std::uint64_t>& s) {
    int c = 0;
    for (std::uint64_t w : s) c += std::popcount(w);
    return c;
  }

  int intersection_size(const std::vector<std::uint64_t>& s, Vertex v) const {
    int c = 0;
    for (std::size_t i = 0; i < words; ++i)
      c += std::popcount(s[i] & adj[v][i]);
    return c;
  }

  void expand(std::vector<std::uint64_t> p, std::vector<std::uint64_t> x) {
    if (empty(p) && empty(x)) {
      maximal.push_back(current);
      return;
    }
    // Greedy pivot: the vertex of P union X covering most of P.
    Vertex pivot = 0;
    int best = -1;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t w = p[i] | x[i];
      while (w) {
        Vertex v = static_cast<Vertex>(i * 64 + std::countr_zero(w));
        w &= w - 1;
        int c = intersection_size(p, v);
        if (c > best) {
          best = c;
          pivot = v;
        }
      }
    }
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t w = p[i] & ~adj[pivot][i];
      while (w) {
        Vertex v = static_cast<Vertex>(i * 64 + std::countr_zero(w));
        w &= w - 1;
        std::vector<std::uint64_t> np(words), nx(words);
        for (std::size_t j = 0; j < words; ++j) {
          np[j] = p[j] & adj[v][j];
          nx[j] = x[j] & adj[v][j];
        }
        current.push_back(v);
        expand(std::move(np), std::move(nx));
        current.pop_back();
        p[i] &= ~(std::uint64_t{1} << (v & 63));
        x[i] |= std::uint64_t{1} << (v & 63);
      }
    }
  }
};

}  // namespace

std::vector<Clique> max_cliques(const CayleyGraph& g, int degree_cap) {
  if (g.degree() > degree_cap)
    throw cap_exceeded("clique search capped at degree " +
                       std::to_string(degree_cap));
  CliqueSearch search(g);
  std::vector<std::uint64_t> p(search.words, ~std::uint64_t{0});
  if (search.count % 64)
    p.back() = (std::uint64_t{1} << (search.count % 64)) - 1;
  search.expand(std::move(p), std::vector<std::uint64_t>(search.words, 0));

  std::size_t best = 0;
  for (const Clique& c : search.maximal) best = std::max(best, c.size());
  std::vector<Clique> out;
  for (Clique& c : search.maximal)
    if (c.size() == best) {
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clique> aq4_cliques() {
  auto coset = [](std::initializer_list<Vertex> base,
                  std::initializer_list<Vertex> shifts) {
    std::vector<Clique> out;
    for (Vertex z : shifts) {
      Clique c;
      for (Vertex v : base) c.push_back(v ^ z);
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return out;
  };
  std::vector<Clique> cliques;
  // C_1 .. C_4: the clique {0, e_3, e_4, e_3+e_4} and its translates by
  // e_1, e_2, e_1+e_2.
  for (Clique& c : coset({0b0000, 0b0010, 0b0001, 0b0011},
                         {0b0000, 0b1000, 0b0100, 0b1100}))
    cliques.push_back(std::move(c));
  // C_5 .. C_8: {0, e_1, 0111, 1111} shifted by e_4, e_3+e_4, e_3.
  for (Clique& c : coset({0b0000, 0b1000, 0b0111, 0b1111},
                         {0b0000, 0b0001, 0b0011, 0b0010}))
    cliques.push_back(std::move(c));
  // C_9 .. C_12: {0, e_3+e_4, e_2, 0111} shifted by e_4, e_1, e_1+e_4.
  for (Clique& c : coset({0b0000, 0b0011, 0b0100, 0b0111},
                         {0b0000, 0b0001, 0b1000, 0b1001}))
    cliques.push_back(std::move(c));
  return cliques;
}

std::string clique_label(std::uint32_t index) {
  return "C" + std::to_string(index + 1);
}

CliqueOrbitReport clique_orbits(const PermGroup& aut,
                                const std::vector<Clique>& cliques) {
  InducedAction act = induced_action(aut, cliques);
  std::vector<std::vector<std::size_t>> orbits;
  for (const auto& orb : act.image.orbits())
    orbits.emplace_back(orb.begin(), orb.end());
  bool faithful = act.faithful();
  return CliqueOrbitReport{cliques, std::move(orbits), std::move(act.image),
                           act.kernel_order, faithful};
}

std::vector<std::vector<std::size_t>> clique_orbit_partition(
    const std::vector<Permutation>& gens, const std::vector<Clique>& cliques) {
  std::map<Clique, std::size_t> index;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    Clique c = cliques[i];
    std::sort(c.begin(), c.end());
    if (!index.emplace(std::move(c), i).second)
      throw std::invalid_argument("cliques must be pairwise distinct");
  }
  std::vector<std::vector<std::size_t>> image(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    image[k].resize(cliques.size());
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      Clique img;
      img.reserve(cliques[i].size());
      for (Vertex v : cliques[i]) img.push_back(gens[k].apply(v));
      std::sort(img.begin(), img.end());
      auto it = index.find(img);
      if (it == index.end())
        throw std::invalid_argument("generators do not permute the cliques");
      image[k][i] = it->second;
    }
  }
  std::vector<char> seen(cliques.size(), 0);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orb{i}, frontier{i};
    seen[i] = 1;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t j : frontier)
        for (std::size_t k = 0; k < gens.size(); ++k) {
          std::size_t q = image[k][j];
          if (!seen[q]) {
            seen[q] = 1;
            orb.push_back(q);
            next.push_back(q);
          }
        }
      frontier = std::move(next);
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

std::vector<std::vector<std::uint64_t>> inter_clique_edge_counts(
    const CayleyGraph& g, const std::vector<Clique>& cliques) {
  std::unordered_set<Vertex> all;
  for (const Clique& c : cliques)
    for (Vertex v : c) {
      if (v >= g.vertex_count())
        throw std::invalid_argument("clique vertex out of range");
      if (!all.insert(v).second)
        throw std::invalid_argument(
            "edge counting needs pairwise disjoint cliques");
    }
  std::size_t k = cliques.size();
  std::vector<std::vector<std::uint64_t>> counts(
      k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < cliques[i].size(); ++a)
      for (std::size_t b = a + 1; b < cliques[i].size(); ++b)
        if (g.adjacent(cliques[i][a], cliques[i][b])) ++counts[i][i];
    for (std::size_t j = i + 1; j < k; ++j) {
      for (Vertex u : cliques[i])
        for (Vertex v : cliques[j])
          if (g.adjacent(u, v)) ++counts[i][j];
      counts[j][i] = counts[i][j];
    }
  }
  return counts;
}

namespace {

// Index permutation of a clique list under a vertex permutation.
Permutation induce_on_cliques(const Permutation& p,
                              const std::vector<Clique>& cliques,
                              const std::map<Clique, std::uint32_t>& index) {
  std::vector<std::uint32_t> images(cliques.size());
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    Clique img;
    img.reserve(cliques[i].size());
    for (Vertex v : cliques[i]) img.push_back(p.apply(v));
    std::sort(img.begin(), img.end());
    auto it = index.find(img);
    if (it == index.end())
      throw std::invalid_argument("permutation does not permute the cliques");
    images[i] = it->second;
  }
  return Permutation(std::move(images));
}

std::map<Clique, std::uint32_t> clique_index(const std::vector<Clique>& cliques) {
  std::map<Clique, std::uint32_t> index;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    Clique c = cliques[i];
    std::sort(c.begin(), c.end());
    index.emplace(std::move(c), static_cast<std::uint32_t>(i));
  }
  return index;
}

}  // namespace

CliqueBlockCertificate verify_clique_block(const PermGroup& aut) {
  if (aut.degree() != 16)
    throw std::invalid_argument(
        "the clique block certificate is specific to n = 4");
  std::vector<Clique> all = aq4_cliques();
  std::vector<Clique> eight(all.begin(), all.begin() + 8);
  auto index = clique_index(eight);
  const std::set<std::uint32_t> lower{0, 1, 2, 3}, upper{4, 5, 6, 7};
  CliqueBlockCertificate cert;
  cert.pass = true;
  for (const Permutation& e : aut.elements()) {
    Permutation idx = induce_on_cliques(e, eight, index);
    std::set<std::uint32_t> img;
    for (std::uint32_t i : lower) img.insert(idx.apply(i));
    if (img == lower) {
      if (cert.fixing_example.empty() && !idx.is_identity())
        cert.fixing_example = idx.cycles(clique_label);
    } else if (img == upper) {
      if (cert.swapping_example.empty())
        cert.swapping_example = idx.cycles(clique_label);
    } else {
      cert.pass = false;
    }
  }
  if (cert.swapping_example.empty() || cert.fixing_example.empty())
    cert.pass = false;
  return cert;
}

Aq4StructureCertificate verify_aq4_structure(const PermGroup& aut) {
  if (aut.degree() != 16)
    throw std::invalid_argument(
        "the product decomposition certificate is specific to n = 4");
  const int n = 4;
  std::vector<Clique> all = aq4_cliques();
  std::vector<Clique> eight(all.begin(), all.begin() + 8);
  auto index = clique_index(eight);
  auto e = [&](int i) { return GF2Vector::unit(n, i); };
  GF2Matrix swap_last({e(1), e(2), e(4), e(3)});
  GF2Matrix to_ones({GF2Vector::all_ones(n), e(2), e(3), e(4)});
  GF2Matrix reversal({e(3), e(2), e(1), GF2Vector::all_ones(n)});

  auto idx = [&](const Permutation& p) {
    return induce_on_cliques(p, eight, index);
  };
  std::vector<Permutation> n1_gens{idx(translation(n, e(3))),
                                   idx(translation(n, e(4))),
                                   idx(matrix_permutation(swap_last))};
  std::vector<Permutation> n2_gens{idx(translation(n, e(1))),
                                   idx(translation(n, GF2Vector::all_ones(n))),
                                   idx(matrix_permutation(to_ones))};
  Permutation rev = idx(matrix_permutation(reversal));

  PermGroup n1 = PermGroup::closure(n1_gens);
  PermGroup n2 = PermGroup::closure(n2_gens);

  Aq4StructureCertificate cert;
  cert.n1_dihedral8 = recognize(n1) == GroupType::dihedral(8);
  cert.n2_dihedral8 = recognize(n2) == GroupType::dihedral(8);

  std::vector<Permutation> common;
  std::set_intersection(n1.elements().begin(), n1.elements().end(),
                        n2.elements().begin(), n2.elements().end(),
                        std::back_inserter(common));
  cert.trivial_intersection =
      common.size() == 1 && common.front().is_identity();

  cert.commute = true;
  for (const Permutation& a : n1.elements())
    for (const Permutation& b : n2.elements())
      if (!(compose(a, b) == compose(b, a))) cert.commute = false;

  Permutation rev_inv = rev.inverse();
  cert.swapped_by_reversal = true;
  for (const Permutation& a : n1.elements())
    if (!n2.contains(compose(compose(rev_inv, a), rev)))
      cert.swapped_by_reversal = false;
  for (const Permutation& b : n2.elements())
    if (!n1.contains(compose(compose(rev_inv, b), rev)))
      cert.swapped_by_reversal = false;

  std::set<Permutation> products;
  for (const Permutation& a : n1.elements())
    for (const Permutation& b : n2.elements())
      products.insert(compose(a, b));
  cert.product_order = products.size();

  std::vector<Permutation> all_gens = n1_gens;
  all_gens.insert(all_gens.end(), n2_gens.begin(), n2_gens.end());
  all_gens.push_back(rev);
  PermGroup whole = PermGroup::closure(all_gens);
  cert.full_order = whole.order() == 128 && aut.order() == 128;
  return cert;
}

}  // namespace aq
