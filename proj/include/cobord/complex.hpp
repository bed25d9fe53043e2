#pragma once

#include <array>
#include <utility>
#include <vector>

#include "cobord/errors.hpp"
#include "cobord/exact.hpp"

namespace cobord {

// Combinatorial oriented manifold of dimension 1 or 2, possibly with boundary.
//
// Dimension 2: triangles are ordered vertex triples; the given cyclic order is
// the orientation (counterclockwise = positive). Codimension-1 cells are the
// edges of the lexicographic edge table.
//
// Dimension 1: segments are ordered vertex pairs forming disjoint cycles and
// paths. Codimension-1 cells for hypersurface purposes are marks at segment
// midpoints, identified by segment id.
struct SurfaceComplex {
  int dimension = 2;
  int vertex_count = 0;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<int, 2>> segments;

  // Derived, dimension 2. Edge table is lexicographic on (min,max) pairs.
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> tri_edges;  // edge ids of (v0,v1),(v1,v2),(v2,v0)
  std::vector<int> edge_tri_inducing;         // triangle inducing u->v (u<v), -1 if none
  std::vector<int> edge_tri_anti;             // triangle inducing v->u, -1 if none
  std::vector<char> vertex_on_boundary;
  // Rotational vertex links, counterclockwise. For interior vertices
  // link_verts[v] is a cycle (first entry not repeated); for boundary
  // vertices a path from one boundary spoke to the other.
  std::vector<std::vector<int>> link_verts;
  std::vector<char> vertex_interior_link;  // link is a cycle

  // Derived, dimension 1.
  std::vector<std::vector<int>> vertex_segments;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int top_count() const {
    return dimension == 2 ? static_cast<int>(triangles.size())
                          : static_cast<int>(segments.size());
  }
  bool edge_on_boundary(int e) const { return edge_tri_inducing[e] == -1 || edge_tri_anti[e] == -1; }
  bool closed() const;
  int edge_id(int u, int v) const;  // -1 if absent
  // Triangle inducing the directed edge p->q, -1 if none.
  int inducing_triangle(int p, int q) const;
  int tri_third_vertex(int t, int p, int q) const;
};

// Codimension-1 cell set with a chosen positive side per cell.
// dimension 2: cells are interior edge ids, positive[i] an adjacent triangle.
// dimension 1: cells are segment ids, positive[i] the endpoint toward which
// the positive side points (sign relative to the segment's direction).
struct Hypersurface {
  std::vector<int> cells;
  std::vector<int> positive;

  bool empty() const { return cells.empty(); }
  int find(int cell) const;  // index in cells, -1 if absent
  bool operator==(const Hypersurface&) const = default;
};

void canonicalize(Hypersurface& h);
Hypersurface reverse_hypersurface(const SurfaceComplex& m, const Hypersurface& h);

struct Chamber {
  int id = 0;
  std::vector<int> top_cells;  // triangle ids; dimension 1: piece ids (see below)
};

// Dimension-1 chambers are built from "pieces": an unmarked segment s is the
// single piece 2s, a marked segment splits at its midpoint into pieces 2s
// (toward endpoint 0) and 2s+1 (toward endpoint 1).
struct CutResult {
  std::vector<Chamber> chambers;    // sorted by smallest member
  std::vector<int> chamber_of_top;  // triangle/piece -> chamber id (-1 for absent piece)
};

struct SideIncidence {
  bool touches_positive = false;
  bool touches_negative = false;
};

// Integer vector over the relative codimension-1 basis (see RelativeBasis).
struct CycleVector {
  std::vector<long long> coeff;

  bool operator==(const CycleVector&) const = default;
};

// Basis of the relative chain group C_{n-1}(M, dM).
// dimension 2: interior edges, in edge-table order.
// dimension 1: the complex subdivided at all midpoints; cells are interior
// original vertices (key v) and segment midpoints (key V + s).
struct RelativeBasis {
  std::vector<int> basis_to_cell;
  std::vector<int> cell_to_basis;  // -1 for cells quotiented out

  int size() const { return static_cast<int>(basis_to_cell.size()); }
};

SurfaceComplex validate_complex(int dimension, int vertex_count,
                                const std::vector<std::array<int, 3>>& triangles,
                                const std::vector<std::array<int, 2>>& segments);

Hypersurface validate_hypersurface(const SurfaceComplex& m, const Hypersurface& raw);

// For hypersurface cell `cell` (with positive data `pos`), the top cells on
// its negative and positive sides.
std::array<int, 2> cell_side_tops(const SurfaceComplex& m, int cell, int pos);

CutResult complement_components(const SurfaceComplex& m, const Hypersurface& sigma);

// Connected components of sigma's cells, each sorted, ordered by smallest cell.
std::vector<std::vector<int>> hypersurface_components(const SurfaceComplex& m,
                                                      const Hypersurface& sigma);

Hypersurface subhypersurface(const Hypersurface& h, const std::vector<int>& cells);

SideIncidence side_incidence(const SurfaceComplex& m, const Hypersurface& sigma,
                             const std::vector<int>& component_cells, const CutResult& cut,
                             int chamber);

RelativeBasis relative_basis(const SurfaceComplex& m);

// (boundary_n, boundary_{n-1}) of the relative chain complex of (M, dM).
std::pair<IntegerMatrix, IntegerMatrix> relative_boundary_matrices(const SurfaceComplex& m);

CycleVector class_of(const SurfaceComplex& m, const Hypersurface& s);

CycleVector cycle_sub(const CycleVector& a, const CycleVector& b);

// Exact test that z bounds, by integrating a top-cell potential across the
// dual adjacency. Independent of the SNF route in exact.hpp; the two are
// cross-checked in tests.
bool cycle_is_relative_boundary(const SurfaceComplex& m, const CycleVector& z);

bool classes_equal(const SurfaceComplex& m, const Hypersurface& s, const Hypersurface& t);

// Signed crossing count of a closed top-cell walk with s: +1 per crossing
// from the negative to the positive side.
long long loop_intersection(const SurfaceComplex& m, const std::vector<int>& loop,
                            const Hypersurface& s);

}  // namespace cobord
