#include "osk/labeled_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace osk {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Merges b into a (a stays a root).
  void absorb(int a, int b) { parent[find(b)] = find(a); }
};

}  // namespace

std::vector<std::vector<int>> LabeledGraph::incidence() const {
  std::vector<std::vector<int>> inc(num_vertices);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    inc[edges[i].from].push_back(i + 1);
    inc[edges[i].to].push_back(-(i + 1));
  }
  return inc;
}

bool LabeledGraph::connected() const {
  if (num_vertices == 0) return true;
  std::vector<std::vector<int>> inc = incidence();
  std::vector<bool> seen(num_vertices, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int visited = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    ++visited;
    for (int se : inc[v]) {
      int w = target(se);
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return visited == num_vertices;
}

int LabeledGraph::betti() const {
  return static_cast<int>(edges.size()) - num_vertices + 1;
}

bool LabeledGraph::is_immersed() const {
  std::vector<std::vector<int>> inc = incidence();
  for (const auto& out : inc) {
    std::vector<int> labels;
    for (int se : out) labels.push_back(signed_label(se));
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
  }
  return true;
}

LabeledGraph wedge_of_words(const std::vector<std::vector<int>>& words, int alphabet_size) {
  LabeledGraph g;
  g.alphabet_size = alphabet_size;
  g.num_vertices = 1;
  for (const auto& w : words) {
    if (w.empty()) continue;
    int prev = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      int next = (k + 1 == w.size()) ? 0 : g.num_vertices++;
      int x = w[k];
      if (x > 0)
        g.edges.push_back({prev, next, x});
      else
        g.edges.push_back({next, prev, -x});
      prev = next;
    }
  }
  return g;
}

LabeledGraph fold(const LabeledGraph& g) {
  UnionFind uf(g.num_vertices);
  std::vector<bool> alive(g.edges.size(), true);
  std::vector<LabeledGraph::Edge> edges = g.edges;
  // Adjacency as signed edge ids per root vertex, merged on union.
  std::vector<std::vector<int>> adj(g.num_vertices);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    adj[edges[i].from].push_back(i + 1);
    adj[edges[i].to].push_back(-(i + 1));
  }
  std::deque<int> work;
  for (int v = 0; v < g.num_vertices; ++v) work.push_back(v);

  auto org = [&](int se) {
    const auto& e = edges[std::abs(se) - 1];
    return uf.find(se > 0 ? e.from : e.to);
  };
  auto tgt = [&](int se) { return org(-se); };

  while (!work.empty()) {
    int v = uf.find(work.front());
    work.pop_front();
    if (v != uf.find(v)) continue;
    bool folded_here = true;
    while (folded_here) {
      folded_here = false;
      std::map<int, int> by_label;  // signed label -> signed edge
      auto& out = adj[v];
      // Drop stale entries (edges no longer alive or no longer at v).
      out.erase(std::remove_if(out.begin(), out.end(),
                               [&](int se) { return !alive[std::abs(se) - 1] || org(se) != v; }),
                out.end());
      for (int se : out) {
        int lbl = se > 0 ? edges[std::abs(se) - 1].label : -edges[std::abs(se) - 1].label;
        auto [it, inserted] = by_label.try_emplace(lbl, se);
        if (inserted) continue;
        int keep = it->second;
        if (std::abs(keep) == std::abs(se)) continue;  // same edge both ways (loop)
        int a = tgt(keep), b = tgt(se);
        alive[std::abs(se) - 1] = false;
        if (a != b) {
          // Merge b into a; a inherits b's adjacency.
          uf.absorb(a, b);
          if (static_cast<int>(adj[a].size()) < static_cast<int>(adj[b].size()))
            std::swap(adj[a], adj[b]);
          adj[a].insert(adj[a].end(), adj[b].begin(), adj[b].end());
          adj[b].clear();
          work.push_back(a);
        }
        work.push_back(v);
        folded_here = true;
        break;
      }
    }
  }

  // Compact, keeping the class of vertex 0 first.
  std::vector<int> index(g.num_vertices, -1);
  LabeledGraph out;
  out.alphabet_size = g.alphabet_size;
  index[uf.find(0)] = out.num_vertices++;
  for (int v = 0; v < g.num_vertices; ++v) {
    int r = uf.find(v);
    if (index[r] < 0) index[r] = out.num_vertices++;
  }
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (!alive[i]) continue;
    out.edges.push_back({index[uf.find(edges[i].from)], index[uf.find(edges[i].to)],
                         edges[i].label});
  }
  return out;
}

LabeledGraph core(const LabeledGraph& g) {
  std::vector<bool> vdead(g.num_vertices, false), edead(g.edges.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> valence(g.num_vertices, 0);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
      if (edead[i]) continue;
      valence[g.edges[i].from]++;
      valence[g.edges[i].to]++;
    }
    for (int v = 0; v < g.num_vertices; ++v) {
      if (vdead[v] || valence[v] != 1) continue;
      vdead[v] = true;
      for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
        if (!edead[i] && (g.edges[i].from == v || g.edges[i].to == v)) edead[i] = true;
      changed = true;
    }
  }
  std::vector<int> index(g.num_vertices, -1);
  LabeledGraph out;
  out.alphabet_size = g.alphabet_size;
  for (int v = 0; v < g.num_vertices; ++v)
    if (!vdead[v]) index[v] = out.num_vertices++;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
    if (!edead[i])
      out.edges.push_back({index[g.edges[i].from], index[g.edges[i].to], g.edges[i].label});
  return out;
}

std::vector<int> canonical_encoding(const LabeledGraph& g) {
  // BFS from every root; per visited vertex emit (signed label, target order)
  // sorted by label. Requires an immersed graph so traversal is deterministic.
  std::vector<std::vector<int>> inc(g.num_vertices);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    inc[g.edges[i].from].push_back(i + 1);
    inc[g.edges[i].to].push_back(-(i + 1));
  }
  std::vector<int> best;
  for (int root = 0; root < g.num_vertices; ++root) {
    std::vector<int> order(g.num_vertices, -1);
    std::vector<int> bfs{root};
    order[root] = 0;
    std::vector<int> enc{g.num_vertices, static_cast<int>(g.edges.size())};
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
      int v = bfs[qi];
      std::vector<std::pair<int, int>> step;  // (signed label, neighbor)
      for (int se : inc[v]) step.push_back({g.signed_label(se), g.target(se)});
      std::sort(step.begin(), step.end());
      for (auto& [lbl, w] : step) {
        if (order[w] < 0) {
          order[w] = static_cast<int>(bfs.size());
          bfs.push_back(w);
        }
        enc.push_back(lbl);
        enc.push_back(order[w]);
      }
    }
    if (static_cast<int>(bfs.size()) != g.num_vertices) continue;  // disconnected
    if (best.empty() || enc < best) best = enc;
  }
  return best;
}

LabeledGraph fiber_product(const LabeledGraph& a, const LabeledGraph& b,
                           std::vector<std::pair<int, int>>* vertex_pairs,
                           std::vector<std::pair<int, int>>* edge_pairs) {
  LabeledGraph out;
  out.alphabet_size = a.alphabet_size;
  out.num_vertices = a.num_vertices * b.num_vertices;
  auto id = [&](int va, int vb) { return va * b.num_vertices + vb; };
  if (vertex_pairs) {
    vertex_pairs->clear();
    for (int va = 0; va < a.num_vertices; ++va)
      for (int vb = 0; vb < b.num_vertices; ++vb) vertex_pairs->push_back({va, vb});
  }
  if (edge_pairs) edge_pairs->clear();
  for (int i = 0; i < static_cast<int>(a.edges.size()); ++i)
    for (int j = 0; j < static_cast<int>(b.edges.size()); ++j) {
      if (a.edges[i].label != b.edges[j].label) continue;
      out.edges.push_back({id(a.edges[i].from, b.edges[j].from),
                           id(a.edges[i].to, b.edges[j].to), a.edges[i].label});
      if (edge_pairs) edge_pairs->push_back({i, j});
    }
  return out;
}

std::optional<std::vector<Word>> invert_basis_map(const std::vector<std::vector<int>>& words,
                                                  int alphabet_size) {
  int n = static_cast<int>(words.size());
  if (n != alphabet_size) return std::nullopt;
  for (const auto& w : words)
    if (w.empty()) return std::nullopt;

  // Decorated wedge: traversal of loop i is worth a_i; every edge carries a
  // Word over a_1..a_n, multiplicative along paths.
  LabeledGraph g = wedge_of_words(words, alphabet_size);
  std::vector<Word> delta(g.edges.size());
  {
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
      for (std::size_t p = 0; p < words[i].size(); ++p, ++k) {
        Word d = (p == 0) ? Word({i + 1}) : Word();
        delta[k] = (words[i][p] > 0) ? d : d.inverse();
      }
    }
  }

  UnionFind uf(g.num_vertices);
  std::vector<bool> alive(g.edges.size(), true);
  auto org = [&](int se) {
    const auto& e = g.edges[std::abs(se) - 1];
    return uf.find(se > 0 ? e.from : e.to);
  };
  auto traversal_delta = [&](int se) {
    return se > 0 ? delta[se - 1] : delta[-se - 1].inverse();
  };
  // Gauge at vertex class v with element h: into-v deltas append h, out-of-v
  // deltas prepend h^-1. Closed-path values at other vertices are unchanged.
  auto gauge = [&](int v, const Word& h) {
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
      if (!alive[i]) continue;
      bool out_v = uf.find(g.edges[i].from) == v;
      bool in_v = uf.find(g.edges[i].to) == v;
      if (in_v) delta[i] = concat(delta[i], h);
      if (out_v) delta[i] = concat(h.inverse(), delta[i]);
    }
  };

  bool progress = true;
  while (progress) {
    progress = false;
    // Find a foldable pair: same origin class, same signed label.
    std::map<std::pair<int, int>, int> seen;  // (origin, signed label) -> signed edge
    for (int i = 0; i < static_cast<int>(g.edges.size()) && !progress; ++i) {
      if (!alive[i]) continue;
      for (int sgn : {+1, -1}) {
        int se = sgn * (i + 1);
        int key_v = org(se);
        int key_l = sgn > 0 ? g.edges[i].label : -g.edges[i].label;
        auto [it, inserted] = seen.try_emplace({key_v, key_l}, se);
        if (inserted) continue;
        int e1 = it->second, e2 = se;
        if (std::abs(e1) == std::abs(e2)) continue;
        int w1 = org(-e1), w2 = org(-e2);
        if (w1 == w2) return std::nullopt;  // rank would drop: not a basis
        Word t1 = traversal_delta(e1), t2 = traversal_delta(e2);
        if (!(t1 == t2)) {
          if (w2 != 0)
            gauge(w2, concat(t2.inverse(), t1));
          else if (w1 != 0)
            gauge(w1, concat(t1.inverse(), t2));
          else
            return std::nullopt;  // both endpoints at base with distinct values
        }
        // Identify e2 with e1.
        alive[std::abs(e2) - 1] = false;
        int a = (w1 == 0 || w2 == 0) ? 0 : std::min(w1, w2);
        uf.absorb(a == w1 ? w1 : w2, a == w1 ? w2 : w1);
        progress = true;
        break;
      }
    }
  }

  // The folded graph must be the rose on the full alphabet at the basepoint.
  std::vector<Word> inverse(alphabet_size);
  std::vector<bool> found(alphabet_size, false);
  int base = uf.find(0);
  int alive_count = 0;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (!alive[i]) continue;
    ++alive_count;
    if (uf.find(g.edges[i].from) != base || uf.find(g.edges[i].to) != base)
      return std::nullopt;
    int l = g.edges[i].label;
    if (found[l - 1]) return std::nullopt;
    found[l - 1] = true;
    inverse[l - 1] = delta[i];
  }
  if (alive_count != alphabet_size) return std::nullopt;
  for (bool f : found)
    if (!f) return std::nullopt;
  return inverse;
}

}  // namespace osk
