#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "osk/free_group.hpp"
#include "osk/labeled_graph.hpp"
#include "osk/rational.hpp"

namespace osk {

// A path of oriented edges, as signed 1-based edge ids.
using EdgePath = std::vector<int>;

// An immersed cyclic edge path.
struct EdgeLoop {
  EdgePath edges;
  bool empty() const { return edges.size() == 0; }
  // Minimal representative over rotations and reversal, for dedup.
  EdgePath canonical() const;
  friend bool operator==(const EdgeLoop& a, const EdgeLoop& b) {
    return a.canonical() == b.canonical();
  }
  friend bool operator<(const EdgeLoop& a, const EdgeLoop& b) {
    return a.canonical() < b.canonical();
  }
};

// A point of unprojectivized Outer space: a metric graph with a marking.
// Edge ids are 1-based so that signed ids denote orientations.
struct MarkedGraph {
  struct Edge {
    int from = 0;
    int to = 0;
    Rat length;
  };

  int rank = 0;
  int num_vertices = 0;
  std::vector<Edge> edges;
  int base = 0;                    // image of the rose vertex
  std::vector<EdgePath> marking;   // per generator: closed edge path at base

  int origin(int se) const {
    const Edge& e = edges[std::abs(se) - 1];
    return se > 0 ? e.from : e.to;
  }
  int target(int se) const { return origin(-se); }
  const Rat& length(int se) const { return edges[std::abs(se) - 1].length; }
  int num_edges() const { return static_cast<int>(edges.size()); }
  Rat volume() const;
  int betti() const { return num_edges() - num_vertices + 1; }
  std::vector<std::vector<int>> incidence() const;  // outgoing signed edges per vertex
  std::vector<int> valences() const;
  bool connected() const;

  // Throws input_error when structural invariants fail. Checks the marking
  // defines a homotopy equivalence (and caches the inverse marking).
  void validate(bool allow_low_valence = false) const;

  EdgePath tighten(EdgePath p) const;
  EdgePath tighten_cyclic(EdgePath p) const;

  // Based edge path of a word via the marking.
  EdgePath realize_word(const Word& w) const;

  // Words in F attached to edges inverting the marking: the product of
  // edge_words along any closed path is the class of that path. Computed by
  // decorated folding on first use; throws if the marking is not a homotopy
  // equivalence.
  const std::vector<Word>& edge_words() const;
  Word word_of_path(const EdgePath& p) const;       // path must be closed at base
  CyclicWord word_of_loop(const EdgeLoop& l) const;

  mutable std::shared_ptr<std::vector<Word>> edge_words_cache;
};

MarkedGraph rose(int rank, const std::vector<Rat>& lengths);
MarkedGraph normalize(const MarkedGraph& g);

// The unique immersed loop freely homotopic to the marking image of z.
EdgeLoop realize_loop(const CyclicWord& z, const MarkedGraph& g);
Rat loop_length(const EdgeLoop& l, const MarkedGraph& g);
int crossing_count(const EdgeLoop& l, int edge_id);

// Quotient by a subforest; surviving lengths are kept (no renormalization).
MarkedGraph collapse_forest(const MarkedGraph& g, const std::vector<int>& forest_edges);

// Splits vertex v along a partition of its directions: directions in
// `moved` reattach to a new vertex joined to v by a fresh edge of length
// `eps` (appended last). Marking paths are rerouted across the new edge.
MarkedGraph blowup(const MarkedGraph& g, int v, const std::vector<int>& moved, const Rat& eps);

// Precompose the marking with an automorphism (the Out(F) action): the new
// marking sends a_i to the old realization of phi(a_i). phi_inverse keeps
// the inverse marking exact.
MarkedGraph twist_marking(const MarkedGraph& g, const FreeGroupMap& phi,
                          const FreeGroupMap& phi_inverse);

// The core of the cover of g corresponding to the subgroup generated by the
// tuple; metric pulled back along the immersion. Labels are g's edge ids.
struct CoreGraph {
  LabeledGraph graph;
  std::vector<Rat> edge_lengths;  // per core edge, pulled back
  std::vector<Word> generators;

  Rat volume() const;
  int betti() const { return graph.betti(); }
};

CoreGraph core_graph(const std::vector<Word>& generators, const MarkedGraph& g);

// A plain metric graph view for shape queries shared between MarkedGraph and
// CoreGraph.
struct GraphView {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> ends;  // from, to
  std::vector<Rat> lengths;

  int origin(int se) const {
    auto& e = ends[std::abs(se) - 1];
    return se > 0 ? e.first : e.second;
  }
  int target(int se) const { return origin(-se); }
};
GraphView view_of(const MarkedGraph& g);
GraphView view_of(const CoreGraph& c);

// All embedded circles, as canonical edge loops.
std::vector<EdgePath> embedded_circles(const GraphView& v);
// All embedded arcs between distinct vertices a, b (simple paths, interior
// vertices visited once, not entering `forbidden` vertices).
std::vector<EdgePath> embedded_arcs(const GraphView& v, int a, int b,
                                    const std::vector<bool>& forbidden);

// Length of a shortest embedded loop; throws on trees.
Rat injectivity_radius(const MarkedGraph& g);
Rat injectivity_radius(const CoreGraph& c);

}  // namespace osk
