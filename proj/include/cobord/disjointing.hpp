#pragma once

#include <vector>

#include "cobord/dual_graph.hpp"
#include "cobord/refine.hpp"

namespace cobord {

// Transverse position of two curves: cell-disjoint, sharing vertices only at
// crossings where the four curve edges alternate around the vertex link.
struct TransverseConfig {
  Hypersurface a, b;
  std::vector<int> crossings;  // vertex ids, sorted
};

TransverseConfig find_crossings(const SurfaceComplex& m, const Hypersurface& a,
                                const Hypersurface& b);

// Per-crossing strand data of the smoothing, in the twice-subdivided complex.
// The u-vertices are the walk neighbors of the crossing (stable ids under
// further subdivision).
struct CrossingRecord {
  int x = -1;
  int a_in_u = -1, a_out_u = -1;  // a's walk enters x from a_in_u, leaves to a_out_u
  int b_in_u = -1, b_out_u = -1;
};

struct SmoothingResult {
  SurfaceComplex complex;  // input subdivided twice
  RefinementTrail trail;
  Hypersurface sigma0;  // oriented smoothing of a u b, class = [a] + [b]
  Hypersurface a_img, b_img;
  std::vector<CrossingRecord> records;
  std::vector<Hypersurface> passengers;
};

SmoothingResult oriented_smoothing(const SurfaceComplex& m, const TransverseConfig& cfg,
                                   const std::vector<Hypersurface>& passengers = {});

// One ledger row per original crossing: the push-off meets a once and b once,
// both on the same sheet component of sigma.
struct CrossingLedgerEntry {
  int crossing_vertex = -1;
  int sigma_a_vertex = -1;  // crossing of sigma with a
  int sigma_b_vertex = -1;  // crossing of sigma with b
  int sheet_component = -1;
};

struct TransversePushoff {
  SurfaceComplex complex;  // smoothing complex subdivided once more
  RefinementTrail trail;   // that single round
  Hypersurface sigma;      // positive push-off of sigma0, transverse to a and b
  Hypersurface a_img, b_img, sigma0_img;
  std::vector<CrossingLedgerEntry> ledger;
  std::vector<Hypersurface> passengers;
};

TransversePushoff positive_pushoff_transverse(const SmoothingResult& sm,
                                              const std::vector<Hypersurface>& passengers = {});

struct BipartiteSplit {
  Hypersurface s;               // components whose negative side touches w
  Hypersurface t;               // positive side touches w
  std::vector<int> w_chambers;  // one side of the bipartition of M \ sigma
};

BipartiteSplit bipartite_split(const SurfaceComplex& m, const Hypersurface& sigma);

struct DisjointingRound {
  int crossings_before = 0;  // |pi_0(A cap B)| entering the round
  int crossings_mid = 0;     // crossings of the chosen middle with each neighbor
};

struct DisjointingTrace {
  SurfaceComplex complex;               // final refinement; all entries live here
  std::vector<Hypersurface> sequence;   // S_0 .. S_m, consecutive entries disjoint
  std::vector<int> level;               // refinement rounds applied when the entry was made
  std::vector<DisjointingRound> rounds;  // halving ledger, one row per smoothing round
};

DisjointingTrace disjointing_sequence(const SurfaceComplex& m, const Hypersurface& a,
                                      const Hypersurface& b);

}  // namespace cobord
