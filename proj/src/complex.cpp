#include "cobord/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace cobord {

namespace {

std::string cs(int c) { return std::to_string(c); }

// Rotate triangle so that vertex v comes first, preserving cyclic order.
std::array<int, 3> rotate_to(const std::array<int, 3>& t, int v) {
  if (t[0] == v) return t;
  if (t[1] == v) return {t[1], t[2], t[0]};
  return {t[2], t[0], t[1]};
}

// Distinguish a genuinely non-orientable gluing from an orientable complex
// whose given triangle orientations are merely incoherent.
[[noreturn]] void throw_orientation_error(const SurfaceComplex& m) {
  int n = static_cast<int>(m.triangles.size());
  std::map<std::array<int, 2>, std::vector<int>> edge_map;
  for (int t = 0; t < n; ++t) {
    auto [a, b, c] = m.triangles[t];
    for (auto [u, v] : std::array<std::array<int, 2>, 3>{{{a, b}, {b, c}, {c, a}}})
      edge_map[{std::min(u, v), std::max(u, v)}].push_back(t);
  }
  auto induces = [&](int t, int u, int v) {
    auto tri = m.triangles[t];
    for (int k = 0; k < 3; ++k)
      if (tri[k] == u && tri[(k + 1) % 3] == v) return true;
    return false;
  };
  std::vector<int> flip(n, -1);
  for (int root = 0; root < n; ++root) {
    if (flip[root] != -1) continue;
    flip[root] = 0;
    std::deque<int> q{root};
    while (!q.empty()) {
      int t = q.front();
      q.pop_front();
      auto [a, b, c] = m.triangles[t];
      for (auto [u, v] : std::array<std::array<int, 2>, 3>{{{a, b}, {b, c}, {c, a}}}) {
        for (int t2 : edge_map[{std::min(u, v), std::max(u, v)}]) {
          if (t2 == t) continue;
          int want = flip[t] ^ (induces(t, u, v) == induces(t2, u, v) ? 1 : 0);
          if (flip[t2] == -1) {
            flip[t2] = want;
            q.push_back(t2);
          } else if (flip[t2] != want) {
            throw non_orientable("orientation propagation fails; no coherent orientation exists");
          }
        }
      }
    }
  }
  throw unglued("complex is orientable but the given triangle orientations are not coherent");
}

void build_links(SurfaceComplex& m) {
  m.link_verts.assign(m.vertex_count, {});
  m.vertex_interior_link.assign(m.vertex_count, 0);
  std::vector<std::vector<int>> tris_at(m.vertex_count);
  for (int t = 0; t < static_cast<int>(m.triangles.size()); ++t)
    for (int v : m.triangles[t]) tris_at[v].push_back(t);

  for (int v = 0; v < m.vertex_count; ++v) {
    auto& tv = tris_at[v];
    if (tv.empty()) throw non_manifold("vertex " + cs(v) + " lies in no triangle");
    // Fan triangle (v,a,b) spans counterclockwise from spoke a to spoke b;
    // its successor is the triangle with rotation (v,b,*).
    std::map<int, int> by_start;
    std::set<int> end_spokes;
    for (int t : tv) {
      auto r = rotate_to(m.triangles[t], v);
      if (!by_start.emplace(r[1], t).second)
        throw non_manifold("fan at vertex " + cs(v) + " branches");
      end_spokes.insert(r[2]);
    }
    std::vector<int> starts;
    for (auto& [a, t] : by_start)
      if (!end_spokes.count(a)) starts.push_back(t);
    if (starts.size() > 1)
      throw non_manifold("link of vertex " + cs(v) + " is not a single cycle or path");

    std::vector<int> link;
    std::set<int> used;
    if (starts.empty()) {
      int first = by_start.begin()->second;
      int cur = first;
      do {
        if (used.count(cur)) throw non_manifold("link of vertex " + cs(v) + " revisits a triangle");
        used.insert(cur);
        auto r = rotate_to(m.triangles[cur], v);
        link.push_back(r[1]);
        auto it = by_start.find(r[2]);
        if (it == by_start.end())
          throw non_manifold("link of vertex " + cs(v) + " is not a single cycle or path");
        cur = it->second;
      } while (cur != first);
      m.vertex_interior_link[v] = 1;
    } else {
      int cur = starts[0];
      link.push_back(rotate_to(m.triangles[cur], v)[1]);
      while (true) {
        if (used.count(cur)) throw non_manifold("link of vertex " + cs(v) + " revisits a triangle");
        used.insert(cur);
        int b = rotate_to(m.triangles[cur], v)[2];
        link.push_back(b);
        auto it = by_start.find(b);
        if (it == by_start.end()) break;
        cur = it->second;
      }
    }
    if (used.size() != tv.size())
      throw non_manifold("link of vertex " + cs(v) + " has several components");
    m.link_verts[v] = std::move(link);
  }
}

void build_dim2(SurfaceComplex& m) {
  std::map<std::array<int, 2>, std::vector<int>> edge_map;
  for (int t = 0; t < static_cast<int>(m.triangles.size()); ++t) {
    auto [a, b, c] = m.triangles[t];
    if (a == b || b == c || a == c) throw bad_input("triangle " + cs(t) + " is degenerate");
    for (int v : m.triangles[t])
      if (v < 0 || v >= m.vertex_count) throw bad_input("triangle vertex out of range");
    for (auto [u, v] : std::array<std::array<int, 2>, 3>{{{a, b}, {b, c}, {c, a}}})
      edge_map[{std::min(u, v), std::max(u, v)}].push_back(t);
  }
  m.edges.clear();
  for (auto& [key, tris] : edge_map) {
    if (tris.size() > 2)
      throw non_manifold("edge (" + cs(key[0]) + "," + cs(key[1]) + ") lies in " +
                         cs(static_cast<int>(tris.size())) + " triangles");
    m.edges.push_back(key);
  }
  m.edge_tri_inducing.assign(m.edges.size(), -1);
  m.edge_tri_anti.assign(m.edges.size(), -1);
  m.tri_edges.assign(m.triangles.size(), {-1, -1, -1});
  for (int t = 0; t < static_cast<int>(m.triangles.size()); ++t) {
    auto [a, b, c] = m.triangles[t];
    std::array<std::array<int, 2>, 3> dirs{{{a, b}, {b, c}, {c, a}}};
    for (int k = 0; k < 3; ++k) {
      auto [p, q] = dirs[k];
      int e = m.edge_id(p, q);
      m.tri_edges[t][k] = e;
      int& slot = p < q ? m.edge_tri_inducing[e] : m.edge_tri_anti[e];
      if (slot != -1) throw_orientation_error(m);
      slot = t;
    }
  }
  m.vertex_on_boundary.assign(m.vertex_count, 0);
  for (int e = 0; e < m.edge_count(); ++e) {
    if (m.edge_on_boundary(e)) {
      m.vertex_on_boundary[m.edges[e][0]] = 1;
      m.vertex_on_boundary[m.edges[e][1]] = 1;
    }
  }
  build_links(m);
  for (int v = 0; v < m.vertex_count; ++v) {
    if (m.vertex_on_boundary[v] == m.vertex_interior_link[v])
      throw non_manifold("link type of vertex " + cs(v) + " disagrees with boundary edges");
  }
}

void build_dim1(SurfaceComplex& m) {
  m.vertex_segments.assign(m.vertex_count, {});
  m.vertex_on_boundary.assign(m.vertex_count, 0);
  for (int s = 0; s < static_cast<int>(m.segments.size()); ++s) {
    auto [a, b] = m.segments[s];
    if (a < 0 || a >= m.vertex_count || b < 0 || b >= m.vertex_count)
      throw bad_input("segment vertex out of range");
    if (a == b) throw bad_input("segment " + cs(s) + " is degenerate");
    m.vertex_segments[a].push_back(s);
    m.vertex_segments[b].push_back(s);
  }
  for (int v = 0; v < m.vertex_count; ++v) {
    if (m.vertex_segments[v].empty())
      throw non_manifold("vertex " + cs(v) + " lies in no segment");
    if (m.vertex_segments[v].size() > 2)
      throw non_manifold("vertex " + cs(v) + " lies in more than two segments");
    if (m.vertex_segments[v].size() == 1) m.vertex_on_boundary[v] = 1;
  }
}

}  // namespace

bool SurfaceComplex::closed() const {
  if (dimension == 2) {
    for (int e = 0; e < edge_count(); ++e)
      if (edge_on_boundary(e)) return false;
    return true;
  }
  for (int v = 0; v < vertex_count; ++v)
    if (vertex_on_boundary[v]) return false;
  return true;
}

int SurfaceComplex::edge_id(int u, int v) const {
  std::array<int, 2> key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return -1;
  return static_cast<int>(it - edges.begin());
}

int SurfaceComplex::inducing_triangle(int p, int q) const {
  int e = edge_id(p, q);
  if (e == -1) return -1;
  return p < q ? edge_tri_inducing[e] : edge_tri_anti[e];
}

int SurfaceComplex::tri_third_vertex(int t, int p, int q) const {
  for (int v : triangles[t])
    if (v != p && v != q) return v;
  throw internal_error("degenerate triangle");
}

int Hypersurface::find(int cell) const {
  auto it = std::lower_bound(cells.begin(), cells.end(), cell);
  if (it == cells.end() || *it != cell) return -1;
  return static_cast<int>(it - cells.begin());
}

void canonicalize(Hypersurface& h) {
  std::vector<int> order(h.cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return h.cells[a] < h.cells[b]; });
  Hypersurface out;
  out.cells.reserve(h.cells.size());
  out.positive.reserve(h.cells.size());
  for (int i : order) {
    out.cells.push_back(h.cells[i]);
    out.positive.push_back(h.positive[i]);
  }
  h = std::move(out);
}

Hypersurface reverse_hypersurface(const SurfaceComplex& m, const Hypersurface& h) {
  Hypersurface r = h;
  for (size_t i = 0; i < h.cells.size(); ++i) {
    if (m.dimension == 2) {
      int e = h.cells[i];
      r.positive[i] = h.positive[i] == m.edge_tri_inducing[e] ? m.edge_tri_anti[e]
                                                              : m.edge_tri_inducing[e];
    } else {
      auto seg = m.segments[h.cells[i]];
      r.positive[i] = h.positive[i] == seg[0] ? seg[1] : seg[0];
    }
  }
  return r;
}

SurfaceComplex validate_complex(int dimension, int vertex_count,
                                const std::vector<std::array<int, 3>>& triangles,
                                const std::vector<std::array<int, 2>>& segments) {
  if (dimension != 1 && dimension != 2) throw bad_input("dimension must be 1 or 2");
  if (vertex_count < 0) throw bad_input("vertex_count must be nonnegative");
  SurfaceComplex m;
  m.dimension = dimension;
  m.vertex_count = vertex_count;
  if (dimension == 2) {
    if (!segments.empty()) throw bad_input("dimension-2 complex with segments");
    m.triangles = triangles;
    build_dim2(m);
  } else {
    if (!triangles.empty()) throw bad_input("dimension-1 complex with triangles");
    m.segments = segments;
    build_dim1(m);
  }
  return m;
}

std::array<int, 2> cell_side_tops(const SurfaceComplex& m, int cell, int pos) {
  if (m.dimension == 2) {
    int n = m.edge_tri_inducing[cell] == pos ? m.edge_tri_anti[cell] : m.edge_tri_inducing[cell];
    return {n, pos};
  }
  auto [a, b] = m.segments[cell];
  if (pos == b) return {2 * cell, 2 * cell + 1};
  if (pos == a) return {2 * cell + 1, 2 * cell};
  throw internal_error("positive vertex not an endpoint");
}

Hypersurface validate_hypersurface(const SurfaceComplex& m, const Hypersurface& raw) {
  if (raw.cells.size() != raw.positive.size())
    throw bad_input("cells and positive_side lengths differ");
  Hypersurface h = raw;
  canonicalize(h);
  for (size_t i = 0; i + 1 < h.cells.size(); ++i)
    if (h.cells[i] == h.cells[i + 1]) throw bad_input("duplicate hypersurface cell");

  if (m.dimension == 1) {
    for (size_t i = 0; i < h.cells.size(); ++i) {
      int s = h.cells[i];
      if (s < 0 || s >= static_cast<int>(m.segments.size()))
        throw bad_input("hypersurface segment id out of range");
      if (h.positive[i] != m.segments[s][0] && h.positive[i] != m.segments[s][1])
        throw inconsistent_coorientation("positive vertex of mark on segment " + cs(s) +
                                         " is not an endpoint");
    }
    return h;
  }

  std::vector<std::vector<int>> at_vertex(m.vertex_count);
  for (size_t i = 0; i < h.cells.size(); ++i) {
    int e = h.cells[i];
    if (e < 0 || e >= m.edge_count()) throw bad_input("hypersurface edge id out of range");
    if (m.edge_on_boundary(e))
      throw cell_on_boundary("hypersurface cell " + cs(e) + " lies on the boundary");
    if (h.positive[i] != m.edge_tri_inducing[e] && h.positive[i] != m.edge_tri_anti[e])
      throw inconsistent_coorientation("positive side of cell " + cs(e) +
                                       " is not an adjacent triangle");
    at_vertex[m.edges[e][0]].push_back(static_cast<int>(i));
    at_vertex[m.edges[e][1]].push_back(static_cast<int>(i));
  }
  for (int v = 0; v < m.vertex_count; ++v) {
    size_t deg = at_vertex[v].size();
    if (deg == 0) continue;
    if (m.vertex_on_boundary[v]) {
      if (deg != 1)
        throw not_proper("curve meets boundary vertex " + cs(v) + " with degree " +
                         cs(static_cast<int>(deg)));
      continue;
    }
    if (deg == 1) throw not_proper("curve has a free interior endpoint at vertex " + cs(v));
    if (deg > 2) throw not_proper("more than two hypersurface edges at vertex " + cs(v));

    // Positive fans must lie on one side of the curve through v: from the
    // positive triangle of one edge, the fan must reach the positive triangle
    // of the other without crossing either hypersurface spoke.
    int e1 = h.cells[at_vertex[v][0]], e2 = h.cells[at_vertex[v][1]];
    int w1 = m.edges[e1][0] == v ? m.edges[e1][1] : m.edges[e1][0];
    int w2 = m.edges[e2][0] == v ? m.edges[e2][1] : m.edges[e2][0];
    const auto& link = m.link_verts[v];
    int L = static_cast<int>(link.size());  // interior vertex: cycle of length L
    // Fan triangle k sits between spokes link[k] and link[(k+1)%L].
    auto fan_tri = [&](int k) { return m.inducing_triangle(link[k], link[(k + 1) % L]); };
    int p1 = h.positive[at_vertex[v][0]];
    int p2 = h.positive[at_vertex[v][1]];
    int k1 = -1, k2 = -1;
    for (int k = 0; k < L; ++k) {
      if (fan_tri(k) == p1) k1 = k;
      if (fan_tri(k) == p2) k2 = k;
    }
    if (k1 == -1 || k2 == -1)
      throw internal_error("positive triangle missing from vertex fan");
    // Walk forward from k1 until blocked by a hypersurface spoke.
    bool reached = k1 == k2;
    for (int dir : {1, -1}) {
      int k = k1;
      for (int step = 0; step < L && !reached; ++step) {
        int crossing = dir == 1 ? link[(k + 1) % L] : link[(k % L + L) % L];
        if (crossing == w1 || crossing == w2) break;
        k = (k + dir + L) % L;
        if (k == k2) reached = true;
      }
    }
    if (!reached)
      throw inconsistent_coorientation("co-orientations of the two curve edges at vertex " +
                                       cs(v) + " disagree across the vertex");
  }
  return h;
}

namespace {

// Present piece ids of a dimension-1 complex cut along sigma.
std::vector<int> dim1_pieces(const SurfaceComplex& m, const Hypersurface& sigma) {
  std::vector<int> pieces;
  for (int s = 0; s < static_cast<int>(m.segments.size()); ++s) {
    if (sigma.find(s) != -1) {
      pieces.push_back(2 * s);
      pieces.push_back(2 * s + 1);
    } else {
      pieces.push_back(2 * s);
    }
  }
  return pieces;
}

// Piece of segment s that claims its endpoint v.
int piece_at(const SurfaceComplex& m, const Hypersurface& sigma, int s, int v) {
  if (sigma.find(s) == -1) return 2 * s;
  return m.segments[s][0] == v ? 2 * s : 2 * s + 1;
}

}  // namespace

CutResult complement_components(const SurfaceComplex& m, const Hypersurface& sigma) {
  CutResult cut;
  if (m.dimension == 2) {
    int n = m.top_count();
    cut.chamber_of_top.assign(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (int e = 0; e < m.edge_count(); ++e) {
      if (m.edge_on_boundary(e) || sigma.find(e) != -1) continue;
      adj[m.edge_tri_inducing[e]].push_back(m.edge_tri_anti[e]);
      adj[m.edge_tri_anti[e]].push_back(m.edge_tri_inducing[e]);
    }
    for (int t = 0; t < n; ++t) {
      if (cut.chamber_of_top[t] != -1) continue;
      Chamber ch;
      ch.id = static_cast<int>(cut.chambers.size());
      std::deque<int> q{t};
      cut.chamber_of_top[t] = ch.id;
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        ch.top_cells.push_back(x);
        for (int y : adj[x])
          if (cut.chamber_of_top[y] == -1) {
            cut.chamber_of_top[y] = ch.id;
            q.push_back(y);
          }
      }
      std::sort(ch.top_cells.begin(), ch.top_cells.end());
      cut.chambers.push_back(std::move(ch));
    }
    return cut;
  }

  // Dimension 1: pieces connected through shared original vertices; a marked
  // segment's halves are separated at the midpoint.
  int np = 2 * static_cast<int>(m.segments.size());
  cut.chamber_of_top.assign(np, -1);
  std::vector<char> present(np, 0);
  for (int p : dim1_pieces(m, sigma)) present[p] = 1;
  std::vector<std::vector<int>> adj(np);
  for (int v = 0; v < m.vertex_count; ++v) {
    const auto& segs = m.vertex_segments[v];
    if (segs.size() == 2) {
      int pa = piece_at(m, sigma, segs[0], v);
      int pb = piece_at(m, sigma, segs[1], v);
      adj[pa].push_back(pb);
      adj[pb].push_back(pa);
    }
  }
  for (int p = 0; p < np; ++p) {
    if (!present[p] || cut.chamber_of_top[p] != -1) continue;
    Chamber ch;
    ch.id = static_cast<int>(cut.chambers.size());
    std::deque<int> q{p};
    cut.chamber_of_top[p] = ch.id;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      ch.top_cells.push_back(x);
      for (int y : adj[x])
        if (cut.chamber_of_top[y] == -1) {
          cut.chamber_of_top[y] = ch.id;
          q.push_back(y);
        }
    }
    std::sort(ch.top_cells.begin(), ch.top_cells.end());
    cut.chambers.push_back(std::move(ch));
  }
  return cut;
}

std::vector<std::vector<int>> hypersurface_components(const SurfaceComplex& m,
                                                      const Hypersurface& sigma) {
  if (m.dimension == 1) {
    std::vector<std::vector<int>> comps;
    for (int c : sigma.cells) comps.push_back({c});  // marks are 0-manifold points
    return comps;
  }
  std::map<int, std::vector<int>> at_vertex;
  for (int e : sigma.cells) {
    at_vertex[m.edges[e][0]].push_back(e);
    at_vertex[m.edges[e][1]].push_back(e);
  }
  std::set<int> seen;
  std::vector<std::vector<int>> comps;
  for (int e0 : sigma.cells) {
    if (seen.count(e0)) continue;
    std::vector<int> comp;
    std::deque<int> q{e0};
    seen.insert(e0);
    while (!q.empty()) {
      int e = q.front();
      q.pop_front();
      comp.push_back(e);
      for (int v : m.edges[e])
        for (int e2 : at_vertex[v])
          if (!seen.count(e2)) {
            seen.insert(e2);
            q.push_back(e2);
          }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Hypersurface subhypersurface(const Hypersurface& h, const std::vector<int>& cells) {
  Hypersurface out;
  for (int c : cells) {
    int i = h.find(c);
    if (i == -1) throw internal_error("subhypersurface cell not present");
    out.cells.push_back(c);
    out.positive.push_back(h.positive[i]);
  }
  canonicalize(out);
  return out;
}

SideIncidence side_incidence(const SurfaceComplex& m, const Hypersurface& sigma,
                             const std::vector<int>& component_cells, const CutResult& cut,
                             int chamber) {
  SideIncidence inc;
  for (int c : component_cells) {
    int i = sigma.find(c);
    if (i == -1) throw internal_error("component cell not in hypersurface");
    auto [neg, pos] = cell_side_tops(m, c, sigma.positive[i]);
    if (cut.chamber_of_top[pos] == chamber) inc.touches_positive = true;
    if (cut.chamber_of_top[neg] == chamber) inc.touches_negative = true;
  }
  return inc;
}

RelativeBasis relative_basis(const SurfaceComplex& m) {
  RelativeBasis b;
  if (m.dimension == 2) {
    b.cell_to_basis.assign(m.edge_count(), -1);
    for (int e = 0; e < m.edge_count(); ++e) {
      if (m.edge_on_boundary(e)) continue;
      b.cell_to_basis[e] = static_cast<int>(b.basis_to_cell.size());
      b.basis_to_cell.push_back(e);
    }
    return b;
  }
  int V = m.vertex_count;
  int S = static_cast<int>(m.segments.size());
  b.cell_to_basis.assign(V + S, -1);
  for (int v = 0; v < V; ++v) {
    if (m.vertex_on_boundary[v]) continue;
    b.cell_to_basis[v] = static_cast<int>(b.basis_to_cell.size());
    b.basis_to_cell.push_back(v);
  }
  for (int s = 0; s < S; ++s) {
    b.cell_to_basis[V + s] = static_cast<int>(b.basis_to_cell.size());
    b.basis_to_cell.push_back(V + s);
  }
  return b;
}

std::pair<IntegerMatrix, IntegerMatrix> relative_boundary_matrices(const SurfaceComplex& m) {
  RelativeBasis b = relative_basis(m);
  if (m.dimension == 2) {
    IntegerMatrix d2(b.size(), m.top_count());
    for (int t = 0; t < m.top_count(); ++t) {
      for (int e : m.tri_edges[t]) {
        int row = b.cell_to_basis[e];
        if (row == -1) continue;
        d2.at(row, t) += m.edge_tri_inducing[e] == t ? 1 : -1;
      }
    }
    // Relative vertex group: interior vertices only.
    std::vector<int> vrow(m.vertex_count, -1);
    int nv = 0;
    for (int v = 0; v < m.vertex_count; ++v)
      if (!m.vertex_on_boundary[v]) vrow[v] = nv++;
    IntegerMatrix d1(nv, b.size());
    for (int col = 0; col < b.size(); ++col) {
      auto [u, v] = m.edges[b.basis_to_cell[col]];
      if (vrow[u] != -1) d1.at(vrow[u], col) -= 1;
      if (vrow[v] != -1) d1.at(vrow[v], col) += 1;
    }
    return {std::move(d2), std::move(d1)};
  }
  // Dimension 1, subdivided at all midpoints: C_1 has two halves per segment
  // (a -> mid, mid -> b), C_0 is the relative basis.
  int S = static_cast<int>(m.segments.size());
  int V = m.vertex_count;
  IntegerMatrix d1(b.size(), 2 * S);
  for (int s = 0; s < S; ++s) {
    auto [a, bb] = m.segments[s];
    int mid = b.cell_to_basis[V + s];
    if (b.cell_to_basis[a] != -1) d1.at(b.cell_to_basis[a], 2 * s) -= 1;
    d1.at(mid, 2 * s) += 1;
    d1.at(mid, 2 * s + 1) -= 1;
    if (b.cell_to_basis[bb] != -1) d1.at(b.cell_to_basis[bb], 2 * s + 1) += 1;
  }
  IntegerMatrix d0(0, b.size());
  return {std::move(d1), std::move(d0)};
}

CycleVector class_of(const SurfaceComplex& m, const Hypersurface& s) {
  RelativeBasis b = relative_basis(m);
  CycleVector z;
  z.coeff.assign(b.size(), 0);
  if (m.dimension == 2) {
    std::map<int, long long> at_vertex;  // relative cycle check
    for (size_t i = 0; i < s.cells.size(); ++i) {
      int e = s.cells[i];
      long long sign = s.positive[i] == m.edge_tri_inducing[e] ? 1 : -1;
      z.coeff[b.cell_to_basis[e]] = sign;
      auto [u, v] = m.edges[e];
      if (!m.vertex_on_boundary[u]) at_vertex[u] -= sign;
      if (!m.vertex_on_boundary[v]) at_vertex[v] += sign;
    }
    for (auto& [v, sum] : at_vertex)
      if (sum != 0) throw internal_error("hypersurface chain is not a relative cycle");
    return z;
  }
  int V = m.vertex_count;
  for (size_t i = 0; i < s.cells.size(); ++i) {
    int seg = s.cells[i];
    z.coeff[b.cell_to_basis[V + seg]] = s.positive[i] == m.segments[seg][1] ? 1 : -1;
  }
  return z;
}

CycleVector cycle_sub(const CycleVector& a, const CycleVector& b) {
  if (a.coeff.size() != b.coeff.size()) throw dimension_mismatch("cycle vectors disagree");
  CycleVector z = a;
  for (size_t i = 0; i < z.coeff.size(); ++i) z.coeff[i] -= b.coeff[i];
  return z;
}

bool cycle_is_relative_boundary(const SurfaceComplex& m, const CycleVector& z) {
  RelativeBasis b = relative_basis(m);
  if (static_cast<int>(z.coeff.size()) != b.size())
    throw dimension_mismatch("cycle vector length");
  if (m.dimension == 2) {
    // Find a triangle potential c with c_inducing - c_anti = z_e on every
    // interior edge; z bounds iff the propagation is consistent.
    int n = m.top_count();
    std::vector<long long> pot(n, 0);
    std::vector<char> seen(n, 0);
    for (int root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::deque<int> q{root};
      while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (int e : m.tri_edges[t]) {
          if (m.edge_on_boundary(e)) continue;
          long long ze = b.cell_to_basis[e] == -1 ? 0 : z.coeff[b.cell_to_basis[e]];
          int other = m.edge_tri_inducing[e] == t ? m.edge_tri_anti[e] : m.edge_tri_inducing[e];
          long long want = m.edge_tri_inducing[e] == t ? pot[t] - ze : pot[t] + ze;
          if (!seen[other]) {
            seen[other] = 1;
            pot[other] = want;
            q.push_back(other);
          } else if (pot[other] != want) {
            return false;
          }
        }
      }
    }
    return true;
  }
  // Dimension 1: on each closed component the coefficients must sum to zero;
  // components with boundary always bound rel dM.
  int V = m.vertex_count;
  std::vector<int> comp(static_cast<int>(m.segments.size()), -1);
  int nc = 0;
  for (int s0 = 0; s0 < static_cast<int>(m.segments.size()); ++s0) {
    if (comp[s0] != -1) continue;
    std::deque<int> q{s0};
    comp[s0] = nc;
    while (!q.empty()) {
      int s = q.front();
      q.pop_front();
      for (int v : m.segments[s])
        for (int s2 : m.vertex_segments[v])
          if (comp[s2] == -1) {
            comp[s2] = nc;
            q.push_back(s2);
          }
    }
    ++nc;
  }
  std::vector<char> has_boundary(nc, 0);
  for (int v = 0; v < V; ++v)
    if (m.vertex_on_boundary[v]) has_boundary[comp[m.vertex_segments[v][0]]] = 1;
  std::vector<long long> total(nc, 0);
  for (int i = 0; i < static_cast<int>(b.basis_to_cell.size()); ++i) {
    int key = b.basis_to_cell[i];
    int c = key < V ? comp[m.vertex_segments[key][0]] : comp[key - V];
    total[c] += z.coeff[i];
  }
  for (int c = 0; c < nc; ++c)
    if (!has_boundary[c] && total[c] != 0) return false;
  return true;
}

bool classes_equal(const SurfaceComplex& m, const Hypersurface& s, const Hypersurface& t) {
  return cycle_is_relative_boundary(m, cycle_sub(class_of(m, s), class_of(m, t)));
}

long long loop_intersection(const SurfaceComplex& m, const std::vector<int>& loop,
                            const Hypersurface& s) {
  int k = static_cast<int>(loop.size());
  if (k == 0) throw loop_not_closed("empty walk");
  long long count = 0;
  if (m.dimension == 2) {
    for (int i = 0; i < k; ++i) {
      int t1 = loop[i], t2 = loop[(i + 1) % k];
      int shared = -1;
      for (int e : m.tri_edges[t1]) {
        if (m.edge_on_boundary(e)) continue;
        int other = m.edge_tri_inducing[e] == t1 ? m.edge_tri_anti[e] : m.edge_tri_inducing[e];
        if (other == t2) shared = e;
      }
      if (shared == -1)
        throw loop_not_closed("walk steps between non-adjacent triangles " + cs(t1) + "," +
                              cs(t2));
      int i_s = s.find(shared);
      if (i_s == -1) continue;
      count += s.positive[i_s] == t2 ? 1 : -1;  // crossing toward the positive side
    }
    return count;
  }
  for (int i = 0; i < k; ++i) {
    int prev = loop[(i - 1 + k) % k], cur = loop[i], next = loop[(i + 1) % k];
    auto shared_vertex = [&](int sa, int sb) {
      int found = -1, cnt = 0;
      for (int v : m.segments[sa])
        for (int w : m.segments[sb])
          if (v == w && v != found) {
            found = v;
            ++cnt;
          }
      if (cnt != 1)
        throw loop_not_closed("segments " + cs(sa) + "," + cs(sb) +
                              " share zero or two vertices");
      return found;
    };
    int enter = shared_vertex(prev, cur);
    int exit = shared_vertex(cur, next);
    if (enter == exit) continue;  // backtrack, no crossing
    int i_s = s.find(cur);
    if (i_s == -1) continue;
    count += s.positive[i_s] == exit ? 1 : -1;
  }
  return count;
}

}  // namespace cobord
