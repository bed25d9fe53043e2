#pragma once

#include <array>
#include <vector>

#include "cobord/complex.hpp"

namespace fixtures {

using cobord::Hypersurface;
using cobord::SurfaceComplex;

// n-segment circle 0-1-...-(n-1)-0.
inline SurfaceComplex circle_complex(int n) {
  std::vector<std::array<int, 2>> segs;
  for (int i = 0; i < n; ++i) segs.push_back({i, (i + 1) % n});
  return cobord::validate_complex(1, n, {}, segs);
}

// n-segment path 0-1-...-n.
inline SurfaceComplex interval_complex(int n) {
  std::vector<std::array<int, 2>> segs;
  for (int i = 0; i < n; ++i) segs.push_back({i, i + 1});
  return cobord::validate_complex(1, n + 1, {}, segs);
}

// Mark on segment s pointing toward the segment's second endpoint (sign +1)
// or first endpoint (sign -1).
inline Hypersurface marks(const SurfaceComplex& m, const std::vector<std::pair<int, int>>& sm) {
  Hypersurface h;
  for (auto [s, sign] : sm) {
    h.cells.push_back(s);
    h.positive.push_back(sign > 0 ? m.segments[s][1] : m.segments[s][0]);
  }
  return cobord::validate_hypersurface(m, h);
}

// Sphere: north pole 0, equator 1,2,3,4, south pole 5.
inline SurfaceComplex octahedron() {
  return cobord::validate_complex(2, 6,
                                  {{0, 1, 2},
                                   {0, 2, 3},
                                   {0, 3, 4},
                                   {0, 4, 1},
                                   {5, 2, 1},
                                   {5, 3, 2},
                                   {5, 4, 3},
                                   {5, 1, 4}},
                                  {});
}

// Northern cap of the octahedron: a disk with boundary the equator.
inline SurfaceComplex octahedron_cap() {
  return cobord::validate_complex(2, 5, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}}, {});
}

inline int torus_vertex(int G, int x, int y) { return ((y % G + G) % G) * G + ((x % G + G) % G); }

// G x G grid torus, each square split along its (x,y)-(x+1,y+1) diagonal.
inline SurfaceComplex grid_torus(int G) {
  std::vector<std::array<int, 3>> tris;
  for (int y = 0; y < G; ++y)
    for (int x = 0; x < G; ++x) {
      int v00 = torus_vertex(G, x, y), v10 = torus_vertex(G, x + 1, y);
      int v11 = torus_vertex(G, x + 1, y + 1), v01 = torus_vertex(G, x, y + 1);
      tris.push_back({v00, v10, v11});
      tris.push_back({v00, v11, v01});
    }
  return cobord::validate_complex(2, G * G, tris, {});
}

// Closed vertex walk -> hypersurface co-oriented to the left of travel.
inline Hypersurface curve_from_walk(const SurfaceComplex& m, const std::vector<int>& walk) {
  Hypersurface h;
  int k = static_cast<int>(walk.size());
  for (int i = 0; i < k; ++i) {
    int p = walk[i], q = walk[(i + 1) % k];
    int e = m.edge_id(p, q);
    if (e == -1) throw cobord::bad_input("walk edge missing");
    h.cells.push_back(e);
    int t = m.inducing_triangle(p, q);
    if (t == -1) throw cobord::bad_input("walk edge has no left triangle");
    h.positive.push_back(t);
  }
  return cobord::validate_hypersurface(m, h);
}

// Vertical loop at column x, walked northward (positive side: west).
inline Hypersurface torus_meridian(const SurfaceComplex& m, int G, int x) {
  std::vector<int> walk;
  for (int y = 0; y < G; ++y) walk.push_back(torus_vertex(G, x, y));
  return curve_from_walk(m, walk);
}

// Horizontal loop at row y, walked eastward (positive side: north).
inline Hypersurface torus_longitude(const SurfaceComplex& m, int G, int y) {
  std::vector<int> walk;
  for (int x = 0; x < G; ++x) walk.push_back(torus_vertex(G, x, y));
  return curve_from_walk(m, walk);
}

// Closed walk of triangles around row y, eastward: upper triangle then lower
// triangle of each square (consecutive pairs share the diagonal or a column
// edge). Crosses every meridian once.
inline std::vector<int> torus_row_triangle_loop(int G, int y) {
  std::vector<int> loop;
  for (int x = 0; x < G; ++x) {
    loop.push_back(2 * (y * G + x) + 1);  // upper triangle of square (x,y)
    loop.push_back(2 * (y * G + x));      // lower triangle
  }
  return loop;
}

// Strip of squares with a flipped end identification.
inline SurfaceComplex mobius_band(int n) {
  // vertices (x,y), x in [0,n), y in {0,1}; column n glues to column 0 with
  // the rows swapped.
  auto vid = [&](int x, int y) {
    if (x == n) return (1 - y) * n + 0;
    return y * n + x;
  };
  std::vector<std::array<int, 3>> tris;
  for (int x = 0; x < n; ++x) {
    tris.push_back({vid(x, 0), vid(x + 1, 0), vid(x + 1, 1)});
    tris.push_back({vid(x, 0), vid(x + 1, 1), vid(x, 1)});
  }
  return cobord::validate_complex(2, 2 * n, tris, {});
}

struct Genus2 {
  SurfaceComplex m;
  std::vector<int> v1, v2;  // torus-grid vertex id -> glued-complex vertex id
};

Genus2 genus2_with_maps(int G);

// Genus-2 surface: two grid tori, one triangle removed from each, glued
// along the resulting boundary triangles with reversed orientation.
inline SurfaceComplex genus2(int G) {
  std::vector<std::array<int, 3>> tris;
  int off = G * G;
  auto v1 = [&](int x, int y) { return torus_vertex(G, x, y); };
  auto v2 = [&](int x, int y) { return off + torus_vertex(G, x, y); };
  // Remove the lower triangle of square (0,0) from each torus.
  for (int y = 0; y < G; ++y)
    for (int x = 0; x < G; ++x) {
      if (!(x == 0 && y == 0)) tris.push_back({v1(x, y), v1(x + 1, y), v1(x + 1, y + 1)});
      tris.push_back({v1(x, y), v1(x + 1, y + 1), v1(x, y + 1)});
    }
  // Second torus, orientation reversed so the glued complex is coherent.
  for (int y = 0; y < G; ++y)
    for (int x = 0; x < G; ++x) {
      if (!(x == 0 && y == 0)) tris.push_back({v2(x + 1, y + 1), v2(x + 1, y), v2(x, y)});
      tris.push_back({v2(x, y + 1), v2(x + 1, y + 1), v2(x, y)});
    }
  // Identify the two boundary triangles' vertices.
  // Torus 1 hole corners: a1=(0,0), b1=(1,0), c1=(1,1); torus 2 same.
  std::vector<int> remap(2 * G * G);
  for (int i = 0; i < 2 * G * G; ++i) remap[i] = i;
  remap[v2(0, 0)] = v1(0, 0);
  remap[v2(1, 0)] = v1(1, 0);
  remap[v2(1, 1)] = v1(1, 1);
  for (auto& t : tris)
    for (int& v : t) v = remap[v];
  // Compact vertex ids.
  std::vector<int> used(2 * G * G, 0);
  for (auto& t : tris)
    for (int v : t) used[v] = 1;
  std::vector<int> newid(2 * G * G, -1);
  int nv = 0;
  for (int i = 0; i < 2 * G * G; ++i)
    if (used[i]) newid[i] = nv++;
  for (auto& t : tris)
    for (int& v : t) v = newid[v];
  return cobord::validate_complex(2, nv, tris, {});
}

inline Genus2 genus2_with_maps(int G) {
  Genus2 out;
  out.m = genus2(G);
  // Rebuild the remap exactly as genus2 does.
  int off = G * G;
  std::vector<int> remap(2 * G * G);
  for (int i = 0; i < 2 * G * G; ++i) remap[i] = i;
  remap[off + torus_vertex(G, 0, 0)] = torus_vertex(G, 0, 0);
  remap[off + torus_vertex(G, 1, 0)] = torus_vertex(G, 1, 0);
  remap[off + torus_vertex(G, 1, 1)] = torus_vertex(G, 1, 1);
  std::vector<int> used(2 * G * G, 0);
  for (int i = 0; i < 2 * G * G; ++i) used[remap[i]] = 1;
  std::vector<int> newid(2 * G * G, -1);
  int nv = 0;
  for (int i = 0; i < 2 * G * G; ++i)
    if (used[i]) newid[i] = nv++;
  out.v1.resize(G * G);
  out.v2.resize(G * G);
  for (int i = 0; i < G * G; ++i) {
    out.v1[i] = newid[remap[i]];
    out.v2[i] = newid[remap[off + i]];
  }
  return out;
}

// Closed walk through mapped vertex ids.
inline Hypersurface mapped_meridian(const SurfaceComplex& m, const std::vector<int>& vmap, int G,
                                    int x) {
  std::vector<int> walk;
  for (int y = 0; y < G; ++y) walk.push_back(vmap[torus_vertex(G, x, y)]);
  return curve_from_walk(m, walk);
}

}  // namespace fixtures
