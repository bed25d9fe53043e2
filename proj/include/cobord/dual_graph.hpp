#pragma once

#include <vector>

#include "cobord/complex.hpp"
#include "cobord/multigraph.hpp"

namespace cobord {

// One graph edge: a connected component of (a \ I) u (b \ I), tagged with its
// origin and the chambers its two sides touch.
struct DualGraphEdge {
  std::vector<int> cells;
  char origin = 'A';
  int origin_index = 0;
  int neg_chamber = 0;
  int pos_chamber = 0;
};

// The graph whose vertices are the chambers of M \ (a u b) and whose edges
// are the components of the symmetric part of a and b. Common components I
// (identical cells, matching co-orientation) still cut the manifold but are
// not edges.
struct DualGraph {
  MultiGraph graph;
  CutResult cut;
  std::vector<DualGraphEdge> edge_data;
  Hypersurface sigma;   // (a \ I) u (b \ I)
  Hypersurface common;  // I
};

struct CobordismStep {
  Hypersurface from;
  Hypersurface to;
  std::vector<int> cobordism;  // chamber ids
  int pushed_vertex = -1;
};

struct CobordismTrace {
  std::vector<CobordismStep> steps;
  Hypersurface initial;
  Hypersurface terminal;
};

DualGraph build_dual_graph(const SurfaceComplex& m, const Hypersurface& a,
                           const Hypersurface& b);

// Edges in `chosen` run from the chamber touching their negative side to the
// one touching the positive side; all others the reverse way.
Orientation orientation_from_subset(const DualGraph& dg, const std::vector<int>& chosen);

// All graph components, with original co-orientation where the edge runs
// negative -> positive and reversed co-orientation elsewhere. Loop edges keep
// the stored co-orientation.
Hypersurface hypersurface_from_orientation(const SurfaceComplex& m, const DualGraph& dg,
                                           const Orientation& o);

// True iff the chambers in w form an embedded cobordism from a to b: their
// frontier is exactly (a \ I) u (b \ I), with w on the positive side of every
// a-cell and the negative side of every b-cell, and w clear of I.
bool verify_cobordism(const SurfaceComplex& m, const std::vector<int>& w, const Hypersurface& a,
                      const Hypersurface& b);

// The full disjoint-case pipeline: homology gate, dual graph, sink-pushing
// reversal, one verified chamber cobordism per push.
CobordismTrace cobordism_sequence(const SurfaceComplex& m, const Hypersurface& a,
                                  const Hypersurface& b);

}  // namespace cobord
