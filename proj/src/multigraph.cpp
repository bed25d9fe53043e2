#include "cobord/multigraph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <queue>
#include <string>

namespace cobord {

MultiGraph build_graph(int vertex_count, const std::vector<std::array<int, 2>>& edge_list) {
  if (vertex_count < 0) throw bad_input("vertex_count must be nonnegative");
  MultiGraph g;
  g.vertex_count = vertex_count;
  g.edges = edge_list;
  g.incident.assign(vertex_count, {});
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw invalid_endpoint("edge " + std::to_string(e) + " endpoint out of range");
    g.incident[u].push_back(e);
    if (v != u) g.incident[v].push_back(e);
  }
  return g;
}

void check_orientation(const MultiGraph& g, const Orientation& o) {
  if (static_cast<int>(o.head.size()) != g.edge_count())
    throw bad_input("orientation defined on wrong edge set");
  for (int e = 0; e < g.edge_count(); ++e) {
    if (o.head[e] != g.edges[e][0] && o.head[e] != g.edges[e][1])
      throw bad_input("head of edge " + std::to_string(e) + " is not one of its endpoints");
  }
}

Orientation reverse_orientation(const MultiGraph& g, const Orientation& o) {
  Orientation r = o;
  for (int e = 0; e < g.edge_count(); ++e)
    r.head[e] = g.other_end(e, o.head[e]);  // loops stay put
  return r;
}

bool is_sink(const MultiGraph& g, const Orientation& o, int v) {
  for (int e : g.incident[v]) {
    if (g.is_loop(e)) return false;  // a loop is both incoming and outgoing
    if (o.head[e] != v) return false;
  }
  return true;
}

namespace {

// BFS forest with enough bookkeeping to emit closed-walk witnesses through
// the component root.
struct Forest {
  std::vector<int> parent_edge;  // -1 at roots
  std::vector<int> parent;       // -1 at roots
  std::vector<int> order;        // BFS order, roots by increasing id
};

Forest bfs_forest(const MultiGraph& g) {
  Forest f;
  f.parent_edge.assign(g.vertex_count, -2);  // -2 = unvisited
  f.parent.assign(g.vertex_count, -1);
  for (int root = 0; root < g.vertex_count; ++root) {
    if (f.parent_edge[root] != -2) continue;
    f.parent_edge[root] = -1;
    std::deque<int> q{root};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      f.order.push_back(v);
      for (int e : g.incident[v]) {
        int w = g.other_end(e, v);
        if (w == v) continue;
        if (f.parent_edge[w] == -2) {
          f.parent_edge[w] = e;
          f.parent[w] = v;
          q.push_back(w);
        }
      }
    }
  }
  return f;
}

// Walk from v up to its root: vertices v .. root, edges alongside.
void path_to_root(const Forest& f, int v, std::vector<int>& verts, std::vector<int>& edges) {
  verts.clear();
  edges.clear();
  while (true) {
    verts.push_back(v);
    if (f.parent_edge[v] == -1) break;
    edges.push_back(f.parent_edge[v]);
    v = f.parent[v];
  }
}

// Closed walk root -> u -> (edge e) -> w -> root, for a non-tree edge e = (u,w).
ClosedWalk witness_through(const Forest& f, int u, int w, int e) {
  std::vector<int> uv, ue, wv, we;
  path_to_root(f, u, uv, ue);
  path_to_root(f, w, wv, we);
  ClosedWalk walk;
  // root..u reversed, then e, then w..root.
  for (int i = static_cast<int>(uv.size()) - 1; i >= 0; --i) walk.vertices.push_back(uv[i]);
  for (int i = static_cast<int>(ue.size()) - 1; i >= 0; --i) walk.edge_ids.push_back(ue[i]);
  walk.edge_ids.push_back(e);
  for (size_t i = 0; i + 1 < wv.size(); ++i) {
    walk.vertices.push_back(wv[i]);
    walk.edge_ids.push_back(we[i]);
  }
  return walk;
}

}  // namespace

std::variant<Bipartition, ClosedWalk> is_bipartite(const MultiGraph& g) {
  // Loops are odd cycles of length 1.
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) {
      ClosedWalk w;
      w.vertices = {g.edges[e][0]};
      w.edge_ids = {e};
      return w;
    }
  }
  Forest f = bfs_forest(g);
  std::vector<int> side(g.vertex_count, 0);
  for (int v : f.order)
    if (f.parent_edge[v] != -1) side[v] = 1 - side[f.parent[v]];
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, w] = g.edges[e];
    if (side[u] == side[w]) return witness_through(f, u, w, e);
  }
  return Bipartition{std::move(side)};
}

std::variant<HeightFunction, ClosedWalk> height_function(const MultiGraph& g,
                                                         const Orientation& o) {
  check_orientation(g, o);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) {
      ClosedWalk w;
      w.vertices = {g.edges[e][0]};
      w.edge_ids = {e};
      return w;  // a loop forces h(v) = h(v) - 1
    }
  }
  Forest f = bfs_forest(g);
  std::vector<long long> h(g.vertex_count, 0);
  for (int v : f.order) {
    int e = f.parent_edge[v];
    if (e == -1) continue;
    int p = f.parent[v];
    h[v] = o.head[e] == v ? h[p] - 1 : h[p] + 1;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, w] = g.edges[e];
    long long expect = o.head[e] == w ? h[u] - 1 : h[u] + 1;
    if (h[w] != expect) return witness_through(f, u, w, e);
  }
  // Shift each component so its maximum height is 0.
  std::vector<int> comp(g.vertex_count, -1);
  int ncomp = 0;
  for (int v : f.order) {
    comp[v] = f.parent_edge[v] == -1 ? ncomp++ : comp[f.parent[v]];
  }
  std::vector<long long> cmax(ncomp, std::numeric_limits<long long>::min());
  for (int v = 0; v < g.vertex_count; ++v) cmax[comp[v]] = std::max(cmax[comp[v]], h[v]);
  for (int v = 0; v < g.vertex_count; ++v) h[v] -= cmax[comp[v]];
  return HeightFunction{std::move(h)};
}

Orientation push_sink(const MultiGraph& g, const Orientation& o, int v) {
  check_orientation(g, o);
  if (v < 0 || v >= g.vertex_count) throw bad_input("no such vertex");
  if (!is_sink(g, o, v))
    throw not_a_sink("vertex " + std::to_string(v) + " has an outgoing or loop edge");
  Orientation r = o;
  for (int e : g.incident[v]) r.head[e] = g.other_end(e, v);
  return r;
}

std::variant<std::vector<int>, ClosedWalk> reversal_sequence(const MultiGraph& g,
                                                             const Orientation& o) {
  auto hf = height_function(g, o);
  if (std::holds_alternative<ClosedWalk>(hf)) return std::get<ClosedWalk>(hf);
  std::vector<long long> h = std::get<HeightFunction>(hf).value;

  // Target heights are -h (the reversal's height function, un-normalized).
  // Each push of v raises h(v) by 2, so v is pushed exactly -h(v) times.
  std::vector<long long> target(h.size());
  for (size_t v = 0; v < h.size(); ++v) target[v] = -h[v];

  Orientation cur = o;
  std::vector<int> pushes;
  while (true) {
    int best = -1;
    for (int v = 0; v < g.vertex_count; ++v) {
      if (h[v] == target[v]) continue;
      if (best == -1 || h[v] < h[best]) best = v;  // ties fall to smaller id
    }
    if (best == -1) break;
    if (!is_sink(g, cur, best))
      throw internal_error("minimal-height vertex is not a sink; height bookkeeping broken");
    cur = push_sink(g, cur, best);
    h[best] += 2;
    pushes.push_back(best);
  }
  if (!(cur == reverse_orientation(g, o)))
    throw internal_error("push sequence did not reach the reversed orientation");
  return pushes;
}

bool oracle_reversal_reachable(const MultiGraph& g, const Orientation& o) {
  check_orientation(g, o);
  int m = g.edge_count();
  if (m > 20) throw too_large("oracle supports at most 20 edges");
  // State = bitmask of flipped edges; target = everything flipped.
  const std::uint32_t target = (1u << m) - 1u;
  std::vector<char> seen(std::size_t{1} << m, 0);
  std::deque<std::uint32_t> q{0};
  seen[0] = 1;
  auto head_of = [&](std::uint32_t mask, int e) {
    int h = o.head[e];
    return (mask >> e) & 1u ? g.other_end(e, h) : h;
  };
  while (!q.empty()) {
    std::uint32_t mask = q.front();
    q.pop_front();
    if (mask == target) return true;
    for (int v = 0; v < g.vertex_count; ++v) {
      bool sink = true;
      std::uint32_t flip = 0;
      for (int e : g.incident[v]) {
        if (g.is_loop(e) || head_of(mask, e) != v) {
          sink = false;
          break;
        }
        flip |= 1u << e;
      }
      if (!sink || flip == 0) continue;  // pushing an isolated vertex is a no-op
      std::uint32_t next = mask ^ flip;
      if (!seen[next]) {
        seen[next] = 1;
        q.push_back(next);
      }
    }
  }
  return false;
}

}  // namespace cobord
