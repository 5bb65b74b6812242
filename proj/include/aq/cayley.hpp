#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aq/gf2.hpp"

// Cayley graphs of GF(2)^n: the vertex set is all 2^n words and u ~ v exactly
// when u + v lands in a fixed connection set S of nonzero words.  In
// characteristic 2 every word is its own inverse, so any nonzero S yields an
// undirected graph.  Vertices travel as raw words; GF2Vector appears at the
// API boundary.

namespace aq {

using Vertex = std::uint32_t;

struct GeneratorSet {
  int n = 0;
  std::vector<GF2Vector> members;  // distinct, nonzero, kept sorted ascending

  GeneratorSet(int n, std::vector<GF2Vector> members);

  bool contains(std::uint32_t word) const;
  std::vector<std::string> strings() const;
};

// e_1 .. e_n together with the words ending in exactly k ones, k = 2 .. n.
// Size 2n - 1.
GeneratorSet augmented_generators(int n);
// e_1 .. e_n.
GeneratorSet hypercube_generators(int n);
// e_1 .. e_n plus the all-ones word.
GeneratorSet folded_hypercube_generators(int n);

class CayleyGraph {
 public:
  explicit CayleyGraph(GeneratorSet s);

  int dim() const { return n_; }
  const GeneratorSet& generators() const { return s_; }

  std::size_t vertex_count() const { return std::size_t{1} << n_; }
  int degree() const { return static_cast<int>(s_.members.size()); }
  std::uint64_t edge_count() const;

  bool adjacent(Vertex u, Vertex v) const {
    return u != v && in_s(u ^ v);
  }
  bool in_s(std::uint32_t word) const {
    return (s_mask_[word >> 6] >> (word & 63)) & 1;
  }
  std::vector<Vertex> neighbors(Vertex v) const;  // ascending

  bool connected() const;  // iff S spans the whole space

  // Cayley graph on the complementary connection set (all nonzero words
  // outside S).
  CayleyGraph complement() const;

 private:
  int n_;
  GeneratorSet s_;
  std::vector<std::uint64_t> s_mask_;  // membership bitmap over all words
};

// BFS layers from v: layer 0 is {v}, layer i the vertices at distance i,
// each layer sorted ascending.  Covers only the component of v.
std::vector<std::vector<Vertex>> distance_partition(const CayleyGraph& g,
                                                    Vertex v);

// Plain undirected graph on at most 64 labelled vertices, adjacency kept as
// one bitmask per vertex.  Built once via add_edge, then treated as
// immutable.
class SmallGraph {
 public:
  explicit SmallGraph(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  void add_edge(std::size_t i, std::size_t j);
  bool adjacent(std::size_t i, std::size_t j) const {
    return (adj_[i] >> j) & 1;
  }
  std::uint64_t adjacency_mask(std::size_t i) const { return adj_[i]; }
  int degree(std::size_t i) const;
  std::size_t edge_count() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> adj_;
};

// Subgraph induced on the given vertices (at most 64, made distinct and
// sorted ascending); labels are the coordinate strings.
SmallGraph induced_subgraph(const CayleyGraph& g,
                            const std::vector<Vertex>& vertices);

// Graphviz DOT renderings, deterministic line order.  The CayleyGraph
// variant refuses n > 10 (the output would be absurd).
std::string dot(const CayleyGraph& g);
std::string dot(const SmallGraph& g);

}  // namespace aq
