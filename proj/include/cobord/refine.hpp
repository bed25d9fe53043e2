#pragma once

#include <array>
#include <vector>

#include "cobord/complex.hpp"

namespace cobord {

// One barycentric round: triangles split into 6, segments into 2.
// Fine vertex ids: originals, then edge/segment midpoints, then barycenters.
struct Subdivision {
  SurfaceComplex fine;
  // dimension 2
  std::vector<int> edge_midpoint;              // coarse edge -> fine vertex
  std::vector<int> tri_center;                 // coarse triangle -> fine vertex
  std::vector<std::array<int, 2>> edge_children;  // fine edges (u,mid),(mid,v) of coarse (u,v)
  std::vector<std::array<int, 6>> tri_children;
  std::vector<int> tri_parent;  // fine triangle -> coarse triangle
  // dimension 1
  std::vector<int> seg_midpoint;
  std::vector<std::array<int, 2>> seg_children;  // (a,mid),(mid,b)

  // Carried image of a hypersurface. Dimension 2: both halves of each cell,
  // positive sides under the same parent triangle. Dimension 1: the half on
  // the mark's negative side, same direction.
  Hypersurface carry(const SurfaceComplex& coarse, const Hypersurface& h) const;
  std::vector<int> carry_region(const std::vector<int>& tris) const;
};

Subdivision barycentric_subdivide(const SurfaceComplex& m);

// A chain of subdivisions, for mapping data across several rounds.
struct RefinementTrail {
  std::vector<Subdivision> rounds;

  const SurfaceComplex& finest(const SurfaceComplex& base) const {
    return rounds.empty() ? base : rounds.back().fine;
  }
  Hypersurface carry(const SurfaceComplex& base, const Hypersurface& h) const;
  std::vector<int> carry_region(const std::vector<int>& tris) const;
};

// Vertex walk along a curve; consecutive vertices joined by edges, closed
// walks wrap around.
struct DirectedWalk {
  std::vector<int> verts;
  bool closed = true;
};

// Decompose into components and orient each by its co-orientation (each cell
// is traversed in the direction its positive triangle induces).
std::vector<DirectedWalk> hypersurface_walks(const SurfaceComplex& m, const Hypersurface& h);

// Cells of a walk, co-oriented to the left of travel (positive_on_left) or to
// the right.
Hypersurface hypersurface_from_walks(const SurfaceComplex& m,
                                     const std::vector<DirectedWalk>& walks,
                                     bool positive_on_left);

// Iterated removal of immediate backtracks a,b,a from a cyclic vertex walk.
// Fan-concatenated parallels produce such spurs where the curve's offset
// track dips into a pocket and straight back out.
void reduce_walk_spurs(std::vector<int>& cyclic_verts);

// Parallel copy of the walk, one fan to the left, same travel direction.
// Requires every left fan to have interior link vertices (true for carried
// curves after a subdivision round).
DirectedWalk left_parallel(const SurfaceComplex& m, const DirectedWalk& walk);

enum class Side { positive, negative };

struct PushoffResult {
  SurfaceComplex complex;  // refined
  Hypersurface image;      // s carried to the refined complex
  Hypersurface pushed;     // disjoint parallel copy on the requested side
  std::vector<Hypersurface> passengers;
  RefinementTrail trail;
};

PushoffResult parallel_pushoff(const SurfaceComplex& m, const Hypersurface& s, Side side,
                               const std::vector<Hypersurface>& passengers = {},
                               int extra_rounds_budget = 2);

}  // namespace cobord
