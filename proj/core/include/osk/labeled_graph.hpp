#pragma once

#include <optional>
#include <vector>

#include "osk/free_group.hpp"

namespace osk {

// A finite graph with oriented edges labeled over an abstract alphabet
// 1..alphabet_size (signed labels denote orientation). The workhorse for
// Stallings folding, core graphs, and fiber products.
struct LabeledGraph {
  struct Edge {
    int from = 0;
    int to = 0;
    int label = 0;  // positive label; traversing backwards reads -label
  };
  int num_vertices = 0;
  int alphabet_size = 0;
  std::vector<Edge> edges;

  int origin(int signed_edge) const {
    const Edge& e = edges[std::abs(signed_edge) - 1];
    return signed_edge > 0 ? e.from : e.to;
  }
  int target(int signed_edge) const { return origin(-signed_edge); }
  int signed_label(int signed_edge) const {
    int l = edges[std::abs(signed_edge) - 1].label;
    return signed_edge > 0 ? l : -l;
  }
  std::vector<std::vector<int>> incidence() const;  // per vertex: outgoing signed edges
  bool connected() const;
  int betti() const;
  // True if no two distinct outgoing edges at a vertex carry the same signed label.
  bool is_immersed() const;
};

// Builds the based wedge of loops spelling the given words (over the letter
// alphabet 1..alphabet_size); vertex 0 is the basepoint.
LabeledGraph wedge_of_words(const std::vector<std::vector<int>>& words, int alphabet_size);

// Stallings folding: identifies same-labeled edge pairs at shared vertices
// until immersed. Vertex 0 (the basepoint) keeps index 0.
LabeledGraph fold(const LabeledGraph& g);

// Iteratively removes valence-1 vertices (the basepoint gets no special
// treatment). Returns the core together with the induced vertex reindexing.
LabeledGraph core(const LabeledGraph& g);

// Deterministic canonical form of an immersed labeled graph up to
// label-preserving isomorphism: minimal BFS encoding over all roots.
std::vector<int> canonical_encoding(const LabeledGraph& g);

// Fiber product over the common alphabet (vertices: pairs, edges: pairs of
// equal-label edges).
LabeledGraph fiber_product(const LabeledGraph& a, const LabeledGraph& b,
                           std::vector<std::pair<int, int>>* vertex_pairs = nullptr,
                           std::vector<std::pair<int, int>>* edge_pairs = nullptr);

// Decorated folding used to invert a basis substitution.
//
// Given words w_1..w_n over an alphabet x_1..x_m that generate the free group
// on the x's freely with n == m (i.e. the assignment a_i -> w_i is an
// isomorphism F_n -> F(x)), returns the inverse images: words u_j over
// a_1..a_n with w-substitution of u_j freely equal to x_j. Returns nullopt if
// the words do not generate (the folded wedge is not the full rose), which
// also serves as a homotopy-equivalence check for markings.
std::optional<std::vector<Word>> invert_basis_map(const std::vector<std::vector<int>>& words,
                                                  int alphabet_size);

}  // namespace osk
