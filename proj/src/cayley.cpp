#include "aq/cayley.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace aq {

GeneratorSet::GeneratorSet(int n_in, std::vector<GF2Vector> members_in)
    : n(n_in), members(std::move(members_in)) {
  if (n < kMinDim || n > kMaxDim)
    throw std::invalid_argument("generator set dimension out of range");
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].dim() != n)
      throw std::invalid_argument("generator dimension mismatch");
    if (members[i].is_zero())
      throw std::invalid_argument("generators must be nonzero");
    if (i > 0 && members[i] == members[i - 1])
      throw std::invalid_argument("generators must be distinct");
  }
}

bool GeneratorSet::contains(std::uint32_t word) const {
  for (const GF2Vector& m : members)
    if (m.bits() == word) return true;
  return false;
}

std::vector<std::string> GeneratorSet::strings() const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (const GF2Vector& m : members) out.push_back(m.str());
  return out;
}

GeneratorSet augmented_generators(int n) {
  std::vector<GF2Vector> m;
  for (int i = 1; i <= n; ++i) m.push_back(GF2Vector::unit(n, i));
  // The word with exactly k trailing ones is 2^k - 1; k = 1 is e_n, already
  // present, so start at 2.
  for (int k = 2; k <= n; ++k)
    m.push_back(GF2Vector(n, (std::uint32_t{1} << k) - 1));
  return GeneratorSet(n, std::move(m));
}

GeneratorSet hypercube_generators(int n) {
  std::vector<GF2Vector> m;
  for (int i = 1; i <= n; ++i) m.push_back(GF2Vector::unit(n, i));
  return GeneratorSet(n, std::move(m));
}

GeneratorSet folded_hypercube_generators(int n) {
  std::vector<GF2Vector> m;
  for (int i = 1; i <= n; ++i) m.push_back(GF2Vector::unit(n, i));
  m.push_back(GF2Vector::all_ones(n));
  return GeneratorSet(n, std::move(m));
}

CayleyGraph::CayleyGraph(GeneratorSet s) : n_(s.n), s_(std::move(s)) {
  s_mask_.assign((vertex_count() + 63) / 64, 0);
  for (const GF2Vector& m : s_.members)
    s_mask_[m.bits() >> 6] |= std::uint64_t{1} << (m.bits() & 63);
}

std::uint64_t CayleyGraph::edge_count() const {
  return static_cast<std::uint64_t>(vertex_count()) *
         static_cast<std::uint64_t>(degree()) / 2;
}

std::vector<Vertex> CayleyGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(s_.members.size());
  for (const GF2Vector& m : s_.members) out.push_back(v ^ m.bits());
  std::sort(out.begin(), out.end());
  return out;
}

bool CayleyGraph::connected() const {
  return Subspace(n_, s_.members).dim() == n_;
}

CayleyGraph CayleyGraph::complement() const {
  std::vector<GF2Vector> m;
  for (std::uint32_t w = 1; w < vertex_count(); ++w)
    if (!in_s(w)) m.push_back(GF2Vector(n_, w));
  return CayleyGraph(GeneratorSet(n_, std::move(m)));
}

std::vector<std::vector<Vertex>> distance_partition(const CayleyGraph& g,
                                                    Vertex v) {
  if (v >= g.vertex_count())
    throw std::invalid_argument("start vertex out of range");
  std::vector<int> dist(g.vertex_count(), -1);
  dist[v] = 0;
  std::vector<std::vector<Vertex>> layers{{v}};
  std::vector<Vertex> frontier{v};
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (Vertex u : frontier)
      for (Vertex w : g.neighbors(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          next.push_back(w);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(next);
    frontier = std::move(next);
  }
  return layers;
}

SmallGraph::SmallGraph(std::vector<std::string> labels)
    : labels_(std::move(labels)), adj_(labels_.size(), 0) {
  if (labels_.empty() || labels_.size() > 64)
    throw std::invalid_argument("SmallGraph takes 1 to 64 vertices");
}

void SmallGraph::add_edge(std::size_t i, std::size_t j) {
  if (i >= size() || j >= size() || i == j)
    throw std::invalid_argument("bad edge");
  adj_[i] |= std::uint64_t{1} << j;
  adj_[j] |= std::uint64_t{1} << i;
}

int SmallGraph::degree(std::size_t i) const {
  return std::popcount(adj_[i]);
}

std::size_t SmallGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::uint64_t m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

SmallGraph induced_subgraph(const CayleyGraph& g,
                            const std::vector<Vertex>& vertices) {
  std::vector<Vertex> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (vs.empty() || vs.size() > 64)
    throw std::invalid_argument("induced subgraph takes 1 to 64 vertices");
  std::vector<std::string> labels;
  labels.reserve(vs.size());
  for (Vertex v : vs) {
    if (v >= g.vertex_count())
      throw std::invalid_argument("induced subgraph vertex out of range");
    labels.push_back(GF2Vector(g.dim(), v).str());
  }
  SmallGraph out(std::move(labels));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) out.add_edge(i, j);
  return out;
}

std::string dot(const CayleyGraph& g) {
  if (g.dim() > 10)
    throw std::invalid_argument("DOT export is limited to n <= 10");
  std::string out = "graph cayley {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out += "  \"" + GF2Vector(g.dim(), v).str() + "\";\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.neighbors(v))
      if (v < w)
        out += "  \"" + GF2Vector(g.dim(), v).str() + "\" -- \"" +
               GF2Vector(g.dim(), w).str() + "\";\n";
  out += "}\n";
  return out;
}

std::string dot(const SmallGraph& g) {
  std::string out = "graph g {\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    out += "  \"" + g.label(i) + "\";\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j))
        out += "  \"" + g.label(i) + "\" -- \"" + g.label(j) + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace aq
