#pragma once

#include <array>
#include <variant>
#include <vector>

#include "cobord/errors.hpp"

namespace cobord {

// Finite multigraph with dense integer ids. Parallel edges and loops allowed.
struct MultiGraph {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;        // endpoint pairs, u == v is a loop
  std::vector<std::vector<int>> incident;       // vertex -> incident edge ids (loops once)

  bool is_loop(int e) const { return edges[e][0] == edges[e][1]; }
  int other_end(int e, int v) const { return edges[e][0] == v ? edges[e][1] : edges[e][0]; }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Per-edge head selection. For a loop the head equals the tail.
struct Orientation {
  std::vector<int> head;  // head[e] is one endpoint of edge e

  bool operator==(const Orientation&) const = default;
};

// Vertex heights, decreasing by 1 along each oriented edge, max 0 per component.
struct HeightFunction {
  std::vector<long long> value;
};

struct Bipartition {
  std::vector<int> side;  // 0 = L, 1 = R
};

// Closed edge walk v0 -e0- v1 -e1- ... -e_{k-1}- v0. Used as the odd-cycle
// witness of is_bipartite and the conflicting-cycle witness of height_function.
struct ClosedWalk {
  std::vector<int> vertices;  // length k (v0..v_{k-1}); walk closes back to v0
  std::vector<int> edge_ids;  // length k

  int length() const { return static_cast<int>(edge_ids.size()); }
};

MultiGraph build_graph(int vertex_count, const std::vector<std::array<int, 2>>& edge_list);

// Validates that `o` selects one endpoint per edge of `g` (loops: the vertex).
void check_orientation(const MultiGraph& g, const Orientation& o);

Orientation reverse_orientation(const MultiGraph& g, const Orientation& o);

bool is_sink(const MultiGraph& g, const Orientation& o, int v);

std::variant<Bipartition, ClosedWalk> is_bipartite(const MultiGraph& g);

std::variant<HeightFunction, ClosedWalk> height_function(const MultiGraph& g,
                                                         const Orientation& o);

// Reverses exactly the edges incident to the sink v, making it a source.
Orientation push_sink(const MultiGraph& g, const Orientation& o, int v);

// Sequence of sink pushes turning o into its full reversal, or the
// conflicting-cycle witness when no height function exists.
std::variant<std::vector<int>, ClosedWalk> reversal_sequence(const MultiGraph& g,
                                                             const Orientation& o);

// Exhaustive check that the reversal is reachable by sink pushes, by
// breadth-first search over all 2^|E| orientations. Independent of the
// height-function machinery.
bool oracle_reversal_reachable(const MultiGraph& g, const Orientation& o);

}  // namespace cobord
