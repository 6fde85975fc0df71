#include "osk/marked_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace osk {

EdgePath EdgeLoop::canonical() const {
  if (edges.empty()) return {};
  auto min_rotation = [](const EdgePath& p) {
    std::size_t n = p.size(), best = 0;
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        int a = p[(best + k) % n], b = p[(r + k) % n];
        if (a != b) {
          if (b < a) best = r;
          break;
        }
      }
    EdgePath out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = p[(best + k) % n];
    return out;
  };
  EdgePath rev(edges.rbegin(), edges.rend());
  for (int& e : rev) e = -e;
  EdgePath a = min_rotation(edges), b = min_rotation(rev);
  return a < b ? a : b;
}

Rat MarkedGraph::volume() const {
  Rat v = 0;
  for (const Edge& e : edges) v += e.length;
  return v;
}

std::vector<std::vector<int>> MarkedGraph::incidence() const {
  std::vector<std::vector<int>> inc(num_vertices);
  for (int i = 0; i < num_edges(); ++i) {
    inc[edges[i].from].push_back(i + 1);
    inc[edges[i].to].push_back(-(i + 1));
  }
  return inc;
}

std::vector<int> MarkedGraph::valences() const {
  std::vector<int> val(num_vertices, 0);
  for (const Edge& e : edges) {
    val[e.from]++;
    val[e.to]++;
  }
  return val;
}

bool MarkedGraph::connected() const {
  if (num_vertices == 0) return false;
  auto inc = incidence();
  std::vector<bool> seen(num_vertices, false);
  std::deque<int> q{0};
  seen[0] = true;
  int count = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    ++count;
    for (int se : inc[v]) {
      int w = target(se);
      if (!seen[w]) {
        seen[w] = true;
        q.push_back(w);
      }
    }
  }
  return count == num_vertices;
}

EdgePath MarkedGraph::tighten(EdgePath p) const {
  EdgePath out;
  for (int se : p) {
    if (!out.empty() && out.back() == -se)
      out.pop_back();
    else
      out.push_back(se);
  }
  return out;
}

EdgePath MarkedGraph::tighten_cyclic(EdgePath p) const {
  p = tighten(std::move(p));
  while (p.size() >= 2 && p.front() == -p.back()) {
    p.erase(p.begin());
    p.pop_back();
  }
  return p;
}

EdgePath MarkedGraph::realize_word(const Word& w) const {
  EdgePath raw;
  for (Letter x : w.ls) {
    const EdgePath& mp = marking[std::abs(x) - 1];
    if (x > 0)
      raw.insert(raw.end(), mp.begin(), mp.end());
    else
      for (auto it = mp.rbegin(); it != mp.rend(); ++it) raw.push_back(-*it);
  }
  return tighten(raw);
}

void MarkedGraph::validate(bool allow_low_valence) const {
  if (rank < 2) throw input_error("rank must be >= 2");
  if (num_vertices <= 0) throw input_error("graph needs vertices");
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= num_vertices || e.to < 0 || e.to >= num_vertices)
      throw input_error("edge endpoint out of range");
    if (e.length <= 0) throw input_error("edge lengths must be positive");
  }
  if (!connected()) throw input_error("graph must be connected");
  if (betti() != rank) throw input_error("first Betti number must equal the rank");
  if (!allow_low_valence) {
    for (int v : valences())
      if (v <= 2) throw input_error("vertices of valence <= 2 are not allowed");
  }
  if (static_cast<int>(marking.size()) != rank)
    throw input_error("marking must list one path per generator");
  for (const EdgePath& p : marking) {
    int at = base;
    for (int se : p) {
      if (se == 0 || std::abs(se) > num_edges()) throw input_error("marking path edge id");
      if (origin(se) != at) throw input_error("marking path not composable");
      at = target(se);
    }
    if (at != base) throw input_error("marking path not closed at the base vertex");
  }
  edge_words();  // throws if the marking is not a homotopy equivalence
}

const std::vector<Word>& MarkedGraph::edge_words() const {
  if (edge_words_cache) return *edge_words_cache;
  // Spanning tree from base, then invert the induced basis substitution.
  auto inc = incidence();
  std::vector<int> parent_edge(num_vertices, 0);
  std::vector<bool> seen(num_vertices, false);
  std::deque<int> q{base};
  seen[base] = true;
  std::vector<bool> in_tree(num_edges(), false);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int se : inc[v]) {
      int w = target(se);
      if (!seen[w]) {
        seen[w] = true;
        in_tree[std::abs(se) - 1] = true;
        parent_edge[w] = se;  // edge from parent into w
        q.push_back(w);
      }
    }
  }
  std::vector<int> petal_of_edge(num_edges(), 0);
  int petals = 0;
  for (int i = 0; i < num_edges(); ++i)
    if (!in_tree[i]) petal_of_edge[i] = ++petals;
  if (petals != rank) throw input_error("marking inversion: Betti number != rank");
  std::vector<std::vector<int>> words;
  for (const EdgePath& p : marking) {
    std::vector<int> w;
    for (int se : p) {
      int pe = petal_of_edge[std::abs(se) - 1];
      if (pe) w.push_back(se > 0 ? pe : -pe);
    }
    words.push_back(std::move(w));
  }
  auto inv = invert_basis_map(words, rank);
  if (!inv) throw input_error("marking is not a homotopy equivalence");
  auto cache = std::make_shared<std::vector<Word>>(num_edges());
  for (int i = 0; i < num_edges(); ++i)
    if (petal_of_edge[i]) (*cache)[i] = (*inv)[petal_of_edge[i] - 1];
  edge_words_cache = std::move(cache);
  return *edge_words_cache;
}

Word MarkedGraph::word_of_path(const EdgePath& p) const {
  const std::vector<Word>& ew = edge_words();
  std::vector<Letter> raw;
  for (int se : p) {
    const Word& w = ew[std::abs(se) - 1];
    if (se > 0)
      raw.insert(raw.end(), w.ls.begin(), w.ls.end());
    else {
      Word inv = w.inverse();
      raw.insert(raw.end(), inv.ls.begin(), inv.ls.end());
    }
  }
  return reduce(raw);
}

CyclicWord MarkedGraph::word_of_loop(const EdgeLoop& l) const {
  Word w = word_of_path(l.edges);
  if (w.empty()) throw input_error("loop is null-homotopic");
  return cyclic_reduce(w).first;
}

MarkedGraph rose(int rank, const std::vector<Rat>& lengths) {
  if (static_cast<int>(lengths.size()) != rank) throw input_error("rose needs one length per petal");
  for (const Rat& l : lengths)
    if (l <= 0) throw input_error("rose petal lengths must be positive");
  MarkedGraph g;
  g.rank = rank;
  g.num_vertices = 1;
  g.base = 0;
  for (int i = 0; i < rank; ++i) {
    g.edges.push_back({0, 0, lengths[i]});
    g.marking.push_back({i + 1});
  }
  auto cache = std::make_shared<std::vector<Word>>();
  for (int i = 1; i <= rank; ++i) cache->push_back(Word({i}));
  g.edge_words_cache = std::move(cache);
  return g;
}

MarkedGraph normalize(const MarkedGraph& g) {
  Rat v = g.volume();
  if (v <= 0) throw input_error("cannot normalize an empty graph");
  MarkedGraph out = g;
  for (auto& e : out.edges) e.length /= v;
  return out;
}

EdgeLoop realize_loop(const CyclicWord& z, const MarkedGraph& g) {
  if (z.size() == 0) throw input_error("trivial class has no loop");
  EdgePath p = g.realize_word(Word(z.ls));
  p = g.tighten_cyclic(p);
  if (p.empty()) throw input_error("class realized as a null-homotopic loop");
  return EdgeLoop{p};
}

Rat loop_length(const EdgeLoop& l, const MarkedGraph& g) {
  Rat s = 0;
  for (int se : l.edges) s += g.length(se);
  return s;
}

int crossing_count(const EdgeLoop& l, int edge_id) {
  int c = 0;
  for (int se : l.edges)
    if (std::abs(se) == edge_id) ++c;
  return c;
}

MarkedGraph collapse_forest(const MarkedGraph& g, const std::vector<int>& forest_edges) {
  std::vector<bool> collapse(g.num_edges(), false);
  for (int id : forest_edges) {
    if (id <= 0 || id > g.num_edges()) throw input_error("collapse: bad edge id");
    collapse[id - 1] = true;
  }
  // Union endpoints; reject cycles.
  std::vector<int> parent(g.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < g.num_edges(); ++i) {
    if (!collapse[i]) continue;
    int a = find(g.edges[i].from), b = find(g.edges[i].to);
    if (a == b) throw input_error("collapse: edge subset contains a cycle");
    parent[b] = a;
  }
  // Component representatives: the base represents its own class.
  std::vector<int> rep(g.num_vertices, -1);
  rep[find(g.base)] = g.base;
  for (int v = 0; v < g.num_vertices; ++v)
    if (rep[find(v)] < 0) rep[find(v)] = v;

  std::vector<int> new_vertex(g.num_vertices, -1);
  MarkedGraph out;
  out.rank = g.rank;
  for (int v = 0; v < g.num_vertices; ++v) {
    int r = find(v);
    if (new_vertex[r] < 0) new_vertex[r] = out.num_vertices++;
  }
  out.base = new_vertex[find(g.base)];
  std::vector<int> new_edge(g.num_edges(), 0);
  for (int i = 0; i < g.num_edges(); ++i) {
    if (collapse[i]) continue;
    out.edges.push_back({new_vertex[find(g.edges[i].from)], new_vertex[find(g.edges[i].to)],
                         g.edges[i].length});
    new_edge[i] = static_cast<int>(out.edges.size());
  }
  for (const EdgePath& p : g.marking) {
    EdgePath np;
    for (int se : p) {
      int ne = new_edge[std::abs(se) - 1];
      if (ne) np.push_back(se > 0 ? ne : -ne);
    }
    out.marking.push_back(out.tighten(np));
  }
  // Inverse marking: conjugate surviving edges by forest paths back to reps.
  if (g.edge_words_cache) {
    const auto& ew = *g.edge_words_cache;
    // Forest adjacency for alpha-paths (rep -> vertex inside a component).
    auto inc = g.incidence();
    std::vector<Word> alpha(g.num_vertices);
    std::vector<bool> seen(g.num_vertices, false);
    for (int v = 0; v < g.num_vertices; ++v) {
      int r = find(v);
      if (seen[rep[r]]) continue;
      std::deque<int> q{rep[r]};
      seen[rep[r]] = true;
      alpha[rep[r]] = Word();
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int se : inc[u]) {
          if (!collapse[std::abs(se) - 1]) continue;
          int w = g.target(se);
          if (seen[w]) continue;
          seen[w] = true;
          Word step = se > 0 ? ew[std::abs(se) - 1] : ew[std::abs(se) - 1].inverse();
          alpha[w] = concat(alpha[u], step);
          q.push_back(w);
        }
      }
    }
    auto cache = std::make_shared<std::vector<Word>>();
    for (int i = 0; i < g.num_edges(); ++i) {
      if (collapse[i]) continue;
      Word w = concat(concat(alpha[g.edges[i].from], ew[i]), alpha[g.edges[i].to].inverse());
      cache->push_back(w);
    }
    out.edge_words_cache = std::move(cache);
  }
  return out;
}

MarkedGraph blowup(const MarkedGraph& g, int v, const std::vector<int>& moved, const Rat& eps) {
  if (v < 0 || v >= g.num_vertices) throw input_error("blowup: bad vertex");
  if (eps <= 0) throw input_error("blowup: edge length must be positive");
  std::set<int> moved_set(moved.begin(), moved.end());
  for (int se : moved_set)
    if (g.origin(se) != v) throw input_error("blowup: direction not based at the vertex");
  MarkedGraph out = g;
  out.edge_words_cache.reset();
  int v2 = out.num_vertices++;
  for (int se : moved_set) {
    if (se > 0)
      out.edges[se - 1].from = v2;
    else
      out.edges[-se - 1].to = v2;
  }
  out.edges.push_back({v, v2, eps});
  int estar = out.num_edges();
  // Repair marking paths: insert the new edge wherever the walk jumps
  // between v and v2, including at the basepoint.
  for (EdgePath& p : out.marking) {
    EdgePath np;
    int at = out.base;
    auto walk_to = [&](int tgt) {
      if (at == tgt) return;
      if (at == v && tgt == v2)
        np.push_back(estar);
      else if (at == v2 && tgt == v)
        np.push_back(-estar);
      else
        throw input_error("blowup: disconnected marking step");
      at = tgt;
    };
    for (int se : p) {
      walk_to(out.origin(se));
      np.push_back(se);
      at = out.target(se);
    }
    walk_to(out.base);
    p = out.tighten(np);
  }
  if (g.edge_words_cache) {
    auto cache = std::make_shared<std::vector<Word>>(*g.edge_words_cache);
    cache->push_back(Word());
    out.edge_words_cache = std::move(cache);
  }
  return out;
}

MarkedGraph twist_marking(const MarkedGraph& g, const FreeGroupMap& phi,
                          const FreeGroupMap& phi_inverse) {
  MarkedGraph out = g;
  out.edge_words_cache.reset();
  for (int i = 1; i <= g.rank; ++i)
    out.marking[i - 1] = g.realize_word(phi.images[i - 1]);
  if (g.edge_words_cache) {
    auto cache = std::make_shared<std::vector<Word>>();
    for (const Word& w : *g.edge_words_cache) cache->push_back(phi_inverse.apply(w));
    out.edge_words_cache = std::move(cache);
  }
  return out;
}

CoreGraph core_graph(const std::vector<Word>& generators, const MarkedGraph& g) {
  std::vector<std::vector<int>> paths;
  for (const Word& w : generators) {
    EdgePath p = g.realize_word(w);
    if (!p.empty()) paths.push_back(p);
  }
  if (paths.empty()) throw input_error("core graph of the trivial subgroup");
  LabeledGraph wedge = wedge_of_words(paths, g.num_edges());
  LabeledGraph folded = core(fold(wedge));
  CoreGraph out;
  out.graph = std::move(folded);
  for (const auto& e : out.graph.edges) out.edge_lengths.push_back(g.length(e.label));
  out.generators = generators;
  return out;
}

Rat CoreGraph::volume() const {
  Rat v = 0;
  for (const Rat& l : edge_lengths) v += l;
  return v;
}

GraphView view_of(const MarkedGraph& g) {
  GraphView v;
  v.num_vertices = g.num_vertices;
  for (const auto& e : g.edges) {
    v.ends.push_back({e.from, e.to});
    v.lengths.push_back(e.length);
  }
  return v;
}

GraphView view_of(const CoreGraph& c) {
  GraphView v;
  v.num_vertices = c.graph.num_vertices;
  for (std::size_t i = 0; i < c.graph.edges.size(); ++i) {
    v.ends.push_back({c.graph.edges[i].from, c.graph.edges[i].to});
    v.lengths.push_back(c.edge_lengths[i]);
  }
  return v;
}

namespace {

void circle_dfs(const GraphView& g, const std::vector<std::vector<int>>& inc, int start,
                int at, EdgePath& path, std::vector<bool>& on_path_vertex,
                std::vector<bool>& used_edge, std::set<EdgePath>& out) {
  for (int se : inc[at]) {
    int id = std::abs(se);
    if (used_edge[id - 1]) continue;
    int w = g.target(se);
    if (w == start) {
      path.push_back(se);
      out.insert(EdgeLoop{path}.canonical());
      path.pop_back();
      continue;
    }
    if (on_path_vertex[w]) continue;
    path.push_back(se);
    on_path_vertex[w] = true;
    used_edge[id - 1] = true;
    circle_dfs(g, inc, start, w, path, on_path_vertex, used_edge, out);
    used_edge[id - 1] = false;
    on_path_vertex[w] = false;
    path.pop_back();
  }
}

}  // namespace

std::vector<EdgePath> embedded_circles(const GraphView& g) {
  std::vector<std::vector<int>> inc(g.num_vertices);
  for (int i = 0; i < static_cast<int>(g.ends.size()); ++i) {
    inc[g.ends[i].first].push_back(i + 1);
    inc[g.ends[i].second].push_back(-(i + 1));
  }
  std::set<EdgePath> out;
  std::vector<bool> on_path(g.num_vertices, false), used(g.ends.size(), false);
  for (int v = 0; v < g.num_vertices; ++v) {
    EdgePath path;
    on_path[v] = true;
    circle_dfs(g, inc, v, v, path, on_path, used, out);
    on_path[v] = false;
  }
  return {out.begin(), out.end()};
}

namespace {

void arc_dfs(const GraphView& g, const std::vector<std::vector<int>>& inc, int at, int goal,
             EdgePath& path, std::vector<bool>& visited, const std::vector<bool>& forbidden,
             std::vector<EdgePath>& out) {
  for (int se : inc[at]) {
    int w = g.target(se);
    if (w == goal) {
      path.push_back(se);
      out.push_back(path);
      path.pop_back();
      continue;
    }
    if (visited[w] || forbidden[w]) continue;
    visited[w] = true;
    path.push_back(se);
    arc_dfs(g, inc, w, goal, path, visited, forbidden, out);
    path.pop_back();
    visited[w] = false;
  }
}

}  // namespace

std::vector<EdgePath> embedded_arcs(const GraphView& g, int a, int b,
                                    const std::vector<bool>& forbidden) {
  std::vector<std::vector<int>> inc(g.num_vertices);
  for (int i = 0; i < static_cast<int>(g.ends.size()); ++i) {
    inc[g.ends[i].first].push_back(i + 1);
    inc[g.ends[i].second].push_back(-(i + 1));
  }
  std::vector<EdgePath> out;
  std::vector<bool> visited(g.num_vertices, false);
  visited[a] = true;
  EdgePath path;
  arc_dfs(g, inc, a, b, path, visited, forbidden, out);
  return out;
}

namespace {

Rat injrad_of_view(const GraphView& v) {
  std::vector<EdgePath> circles = embedded_circles(v);
  if (circles.empty()) throw input_error("injectivity radius of a tree");
  Rat best = 0;
  bool first = true;
  for (const EdgePath& c : circles) {
    Rat len = 0;
    for (int se : c) len += v.lengths[std::abs(se) - 1];
    if (first || len < best) {
      best = len;
      first = false;
    }
  }
  return best;
}

}  // namespace

Rat injectivity_radius(const MarkedGraph& g) { return injrad_of_view(view_of(g)); }
Rat injectivity_radius(const CoreGraph& c) { return injrad_of_view(view_of(c)); }

}  // namespace osk
