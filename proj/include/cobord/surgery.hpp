#pragma once

#include <vector>

#include "cobord/dual_graph.hpp"
#include "cobord/refine.hpp"

namespace cobord {

enum class EventKind { slide, birth, saddle, death };

// One elementary move of the sweeping curve. The region change is
// after = before -/+ d(support); forward sweeping only subtracts, the tube
// rewriting also moves the curve backwards.
struct SurgeryEvent {
  EventKind kind = EventKind::slide;
  int index = -1;  // -1 none (slide), 0 birth, 1 saddle, 2 death
  std::vector<int> support;
  bool forward = true;  // region added (curve advances) vs removed
  Hypersurface before;
  Hypersurface after;
};

struct EventTrace {
  std::vector<SurgeryEvent> events;
  Hypersurface start;
  Hypersurface end;
  bool normal_form = false;  // set by reorder_events
};

const char* event_kind_name(EventKind k);

// Component-count change of an event (slide 0, birth +1, death -1,
// saddle +-1), recomputed from the snapshots.
int event_component_delta(const SurfaceComplex& m, const SurgeryEvent& ev);

struct SweepResult {
  SurfaceComplex complex;  // m, subdivided when deferral forced a restart
  RefinementTrail trail;   // empty if no retry was needed
  EventTrace trace;
};

// Decompose the chamber cobordism w from a to b into elementary events by
// sweeping its triangles breadth-first from the a-adjacent side. Deferred
// configurations trigger up to `subdivision_budget` restarts on a subdivided
// complex before SweepStuck.
SweepResult sweep_cobordism(const SurfaceComplex& m, const std::vector<int>& w,
                            const Hypersurface& a, const Hypersurface& b,
                            int subdivision_budget = 2);

// Best-effort bubble reorder toward increasing surgery index (attachments
// before removals within index 1); adjacent events swap only when their
// supports are disjoint and the intermediate snapshot revalidates.
EventTrace reorder_events(const SurfaceComplex& m, const EventTrace& trace);

// Replace births and deaths by slides plus one index-1 tube event each,
// along a triangle path from the circle to the current curve.
EventTrace births_deaths_to_tubes(const SurfaceComplex& m, const EventTrace& trace);

}  // namespace cobord
