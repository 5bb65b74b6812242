#include "aq/blocks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace aq {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Finest equivalence containing the seed pairs that every generator maps
// class to class.  Whenever two classes merge the merging pair is replayed
// through all generators, so images of equivalent points end up equivalent.
std::vector<Vertex> block_closure(const std::vector<Permutation>& gens,
                                  const std::vector<std::pair<Vertex, Vertex>>& seeds,
                                  Vertex root) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  std::size_t degree = gens.front().degree();
  UnionFind uf(degree);
  std::vector<std::pair<Vertex, Vertex>> queue;
  auto merge = [&](Vertex x, Vertex y) {
    if (uf.unite(x, y)) queue.emplace_back(x, y);
  };
  for (auto [a, b] : seeds) merge(a, b);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [p, q] = queue[i];
    for (const Permutation& g : gens) merge(g.apply(p), g.apply(q));
  }
  std::uint32_t cls = uf.find(root);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < degree; ++v)
    if (uf.find(v) == cls) out.push_back(v);
  return out;
}

}  // namespace

std::vector<Vertex> minimal_block(const std::vector<Permutation>& gens,
                                  Vertex a, Vertex b) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  std::size_t degree = gens.front().degree();
  if (a >= degree || b >= degree || a == b)
    throw std::invalid_argument("minimal block needs two distinct points");
  return block_closure(gens, {{a, b}}, a);
}

std::vector<Subspace> stabilizer_closed_subspaces(const StabilizerResult& stab,
                                                  int n) {
  const PermGroup& g = stab.group;
  if (g.degree() != (std::size_t{1} << n))
    throw std::invalid_argument("stabilizer degree does not match n");
  auto orbits = g.orbits();
  std::vector<std::size_t> orbit_of(g.degree());
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::uint32_t p : orbits[i]) orbit_of[p] = i;

  // Smallest subspace containing the seed that is a union of orbits: grow
  // the span until it stops absorbing new orbits.
  auto close = [&](std::vector<std::uint32_t> seed) {
    Subspace s(n, seed);
    while (true) {
      std::set<std::size_t> touched;
      for (std::uint32_t m : s.members()) touched.insert(orbit_of[m]);
      std::vector<std::uint32_t> all;
      for (std::size_t i : touched)
        all.insert(all.end(), orbits[i].begin(), orbits[i].end());
      Subspace grown(n, all);
      if (grown.dim() == s.dim()) return s;
      s = grown;
    }
  };

  std::map<std::vector<GF2Vector>, Subspace> found;
  std::vector<Subspace> frontier;
  auto visit = [&](const Subspace& s) {
    if (s.dim() == 0 || s.dim() == n) return;
    if (found.emplace(s.basis(), s).second) {
      if (found.size() > (std::size_t{1} << 20))
        throw cap_exceeded("too many stabilizer-closed subspaces");
      frontier.push_back(s);
    }
  };
  for (const auto& orb : orbits)
    if (!(orb.size() == 1 && orb.front() == 0)) visit(close(orb));
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    Subspace s = frontier[i];
    for (const auto& orb : orbits) {
      if (orb.size() == 1 && orb.front() == 0) continue;
      if (s.contains(orb.front())) continue;
      std::vector<std::uint32_t> seed = s.members();
      seed.insert(seed.end(), orb.begin(), orb.end());
      visit(close(std::move(seed)));
    }
  }

  std::vector<Subspace> out;
  for (const auto& [basis, s] : found) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis() < b.basis();
  });
  return out;
}

namespace {

std::vector<std::vector<Vertex>> closure_route(const CayleyGraph& g,
                                               const FullAutResult& aut) {
  std::set<std::vector<Vertex>> blocks;
  std::size_t count = g.vertex_count();
  for (Vertex v = 1; v < count; ++v) {
    std::vector<Vertex> mb = minimal_block(aut.generators, 0, v);
    if (mb.size() < count) blocks.insert(std::move(mb));
  }
  // Join closure: the smallest block containing two blocks may be new.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<Vertex>> list(blocks.begin(), blocks.end());
    for (std::size_t i = 0; i < list.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < list.size() && !changed; ++j) {
        std::vector<std::pair<Vertex, Vertex>> seeds;
        for (Vertex x : list[i]) seeds.emplace_back(0, x);
        for (Vertex x : list[j]) seeds.emplace_back(0, x);
        std::vector<Vertex> join = block_closure(aut.generators, seeds, 0);
        if (join.size() < count && !blocks.count(join)) {
          blocks.insert(std::move(join));
          changed = true;
        }
      }
  }
  return {blocks.begin(), blocks.end()};
}

// The whole automorphism group, element by element: every automorphism is a
// translation followed by a stabilizer element, and distinct pairs give
// distinct maps.
std::vector<Permutation> all_automorphisms(const CayleyGraph& g,
                                           const FullAutResult& aut) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(aut.order));
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    Permutation rho = translation(g.dim(), GF2Vector(g.dim(), z));
    for (const Permutation& s : aut.stabilizer.group.elements())
      out.push_back(compose(rho, s));
  }
  return out;
}

bool block_axiom_holds(const std::vector<Vertex>& block,
                       const std::vector<Permutation>& perms) {
  for (const Permutation& p : perms) {
    std::vector<Vertex> img;
    img.reserve(block.size());
    for (Vertex v : block) img.push_back(p.apply(v));
    std::sort(img.begin(), img.end());
    if (img == block) continue;
    std::size_t i = 0, j = 0;
    bool disjoint = true;
    while (i < img.size() && j < block.size()) {
      if (img[i] == block[j]) {
        disjoint = false;
        break;
      }
      if (img[i] < block[j])
        ++i;
      else
        ++j;
    }
    if (!disjoint) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<Vertex>> blocks_by_closure(const CayleyGraph& g,
                                                   const SearchCaps& caps) {
  return closure_route(g, full_aut(g, caps));
}

BlockReport blocks_containing_e(const CayleyGraph& g, const SearchCaps& caps) {
  FullAutResult aut = full_aut(g, caps);
  BlockReport report;
  report.normal = aut.stabilizer.all_linear();
  report.aut_order = aut.order;
  report.stabilizer_order = aut.stabilizer.group.order();

  std::vector<std::vector<Vertex>> raw;
  if (report.normal) {
    for (const Subspace& s : stabilizer_closed_subspaces(aut.stabilizer, g.dim()))
      raw.push_back(s.members());
  } else {
    raw = closure_route(g, aut);
  }

  for (std::vector<Vertex>& members : raw) {
    Subspace s(g.dim(), members);
    if (s.members() != members)
      throw std::logic_error("a block through 0 failed to be a subspace");
    BlockInfo info{std::move(members), s, coset_partition(s), 0};
    info.subgroup_order =
        static_cast<std::uint64_t>(info.block.size()) * report.stabilizer_order;
    report.blocks.push_back(std::move(info));
  }
  std::sort(report.blocks.begin(), report.blocks.end(),
            [](const BlockInfo& a, const BlockInfo& b) {
              if (a.block.size() != b.block.size())
                return a.block.size() < b.block.size();
              return a.block < b.block;
            });

  report.axiom_verified_exhaustively = report.aut_order <= caps.group_order;
  std::vector<Permutation> perms = report.axiom_verified_exhaustively
                                       ? all_automorphisms(g, aut)
                                       : aut.generators;
  report.axiom_holds = true;
  for (const BlockInfo& info : report.blocks)
    if (!block_axiom_holds(info.block, perms)) report.axiom_holds = false;
  return report;
}

CorrespondenceCertificate verify_block_subgroup_correspondence(
    const CayleyGraph& g, const BlockReport& report, const SearchCaps& caps) {
  if (!report.normal)
    throw std::invalid_argument(
        "the block-subgroup correspondence needs a linear stabilizer");
  StabilizerResult stab = vertex_stabilizer(g, caps);
  CorrespondenceCertificate cert;
  for (const BlockInfo& info : report.blocks) {
    CorrespondenceCertificate::Entry entry;
    entry.block = info.block;
    std::vector<Permutation> prods;
    prods.reserve(info.block.size() * stab.group.order());
    for (Vertex z : info.block) {
      Permutation rho = translation(g.dim(), GF2Vector(g.dim(), z));
      for (const Permutation& s : stab.group.elements())
        prods.push_back(compose(rho, s));
    }
    std::sort(prods.begin(), prods.end());
    prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
    entry.subgroup_order = prods.size();

    entry.product_closed =
        prods.size() == info.block.size() * stab.group.order();
    for (std::size_t i = 0; i < prods.size() && entry.product_closed; ++i)
      for (std::size_t j = 0; j < prods.size(); ++j)
        if (!std::binary_search(prods.begin(), prods.end(),
                                compose(prods[i], prods[j]))) {
          entry.product_closed = false;
          break;
        }

    std::vector<Vertex> orbit;
    for (const Permutation& p : prods) orbit.push_back(p.apply(0));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    entry.orbit_matches = orbit == info.block;

    cert.entries.push_back(std::move(entry));
  }
  return cert;
}

}  // namespace aq
