#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "cobord/refine.hpp"
#include "cobord/surgery.hpp"
#include "fixtures.hpp"

using namespace cobord;
using namespace fixtures;

namespace {

// Region frontier co-oriented away from the region.
Hypersurface region_boundary_outward(const SurfaceComplex& m, const std::set<int>& region) {
  Hypersurface h;
  for (int e = 0; e < m.edge_count(); ++e) {
    if (m.edge_on_boundary(e)) continue;
    int ti = m.edge_tri_inducing[e], ta = m.edge_tri_anti[e];
    bool ii = region.count(ti), ia = region.count(ta);
    if (ii == ia) continue;
    h.cells.push_back(e);
    h.positive.push_back(ii ? ta : ti);
  }
  return validate_hypersurface(m, h);
}

std::map<EventKind, int> kind_counts(const EventTrace& tr) {
  std::map<EventKind, int> c;
  for (const auto& ev : tr.events) c[ev.kind]++;
  return c;
}

void check_trace_coherence(const SurfaceComplex& m, const EventTrace& tr,
                           const Hypersurface& a, const Hypersurface& b) {
  CHECK(tr.start == a);
  CHECK(tr.end == b);
  const Hypersurface* prev = &tr.start;
  for (const auto& ev : tr.events) {
    CHECK(ev.before == *prev);
    // Component-count deltas per kind.
    int delta = event_component_delta(m, ev);
    switch (ev.kind) {
      case EventKind::slide: CHECK(delta == 0); break;
      case EventKind::birth: CHECK(delta == 1); break;
      case EventKind::death: CHECK(delta == -1); break;
      case EventKind::saddle: CHECK((delta == 1 || delta == -1)); break;
    }
    // The relative class never moves.
    CHECK(classes_equal(m, ev.before, ev.after));
    prev = &ev.after;
  }
  CHECK(*prev == tr.end);
}

// Tube fixture: meridians on a 6-torus plus a dying circle on the
// a-side and a born circle on the b-side, both in the far annulus.
struct TubeFixture {
  SurfaceComplex m = grid_torus(6);
  Hypersurface a, b;
  std::vector<int> w;
  TubeFixture() {
    Hypersurface m0 = torus_meridian(m, 6, 0);
    Hypersurface m3 = torus_meridian(m, 6, 3);
    int t_death = 2 * (1 * 6 + 1);  // lower triangle of square (1,1)
    int t_birth = 2 * (4 * 6 + 1);  // lower triangle of square (1,4)
    Hypersurface death_circle = region_boundary_outward(m, {t_death});
    death_circle = reverse_hypersurface(m, death_circle);  // positive side inward
    Hypersurface birth_circle = region_boundary_outward(m, {t_birth});
    a = m0;
    for (size_t i = 0; i < death_circle.cells.size(); ++i) {
      a.cells.push_back(death_circle.cells[i]);
      a.positive.push_back(death_circle.positive[i]);
    }
    a = validate_hypersurface(m, a);
    b = m3;
    for (size_t i = 0; i < birth_circle.cells.size(); ++i) {
      b.cells.push_back(birth_circle.cells[i]);
      b.positive.push_back(birth_circle.positive[i]);
    }
    b = validate_hypersurface(m, b);
    // Chambers: west annulus + the two little disks.
    Hypersurface cut = a;
    for (size_t i = 0; i < b.cells.size(); ++i) {
      cut.cells.push_back(b.cells[i]);
      cut.positive.push_back(b.positive[i]);
    }
    cut = validate_hypersurface(m, cut);
    CutResult c = complement_components(m, cut);
    std::set<int> ids;
    ids.insert(c.chamber_of_top[2 * (0 * 6 + 4)]);  // square (4,0): west annulus
    ids.insert(c.chamber_of_top[t_death]);
    ids.insert(c.chamber_of_top[t_birth]);
    w.assign(ids.begin(), ids.end());
  }
};

}  // namespace

TEST_CASE("annulus sweep: slides only") {
  SurfaceComplex t = grid_torus(4);
  Hypersurface m0 = torus_meridian(t, 4, 0);
  Hypersurface m2 = torus_meridian(t, 4, 2);
  DualGraph dg = build_dual_graph(t, m0, m2);
  int w = dg.edge_data[0].origin == 'A' ? dg.edge_data[0].pos_chamber
                                        : dg.edge_data[0].neg_chamber;
  SweepResult res = sweep_cobordism(t, {w}, m0, m2);
  CHECK(res.trail.rounds.empty());
  auto counts = kind_counts(res.trace);
  CHECK(counts[EventKind::slide] == static_cast<int>(res.trace.events.size()));
  check_trace_coherence(res.complex, res.trace, m0, m2);
  // Swept support equals the cobordism region.
  std::set<int> support;
  for (const auto& ev : res.trace.events)
    for (int tri : ev.support) support.insert(tri);
  CHECK(support.size() == 16);  // half the torus
}

TEST_CASE("disk sweep: slides then one death") {
  SurfaceComplex s2 = octahedron();
  Hypersurface eq = curve_from_walk(s2, {1, 2, 3, 4});
  SweepResult res = sweep_cobordism(s2, {0}, eq, Hypersurface{});
  auto counts = kind_counts(res.trace);
  CHECK(counts[EventKind::death] == 1);
  CHECK(counts[EventKind::birth] == 0);
  CHECK(counts[EventKind::saddle] == 0);
  CHECK(res.trace.events.back().kind == EventKind::death);
  check_trace_coherence(res.complex, res.trace, eq, Hypersurface{});
}

TEST_CASE("reverse disk sweep: one birth then slides") {
  SurfaceComplex s2 = octahedron();
  // Southern cap viewed from the empty curve: w on the negative side of b.
  Hypersurface eq = curve_from_walk(s2, {1, 2, 3, 4});
  CutResult cut = complement_components(s2, eq);
  int south = cut.chamber_of_top[4];  // triangle 4 = (5,2,1)
  SweepResult res = sweep_cobordism(s2, {south}, Hypersurface{}, eq);
  auto counts = kind_counts(res.trace);
  CHECK(counts[EventKind::birth] == 1);
  CHECK(counts[EventKind::death] == 0);
  CHECK(res.trace.events.front().kind == EventKind::birth);
  check_trace_coherence(res.complex, res.trace, Hypersurface{}, eq);
}

TEST_CASE("pair of pants sweep: exactly one saddle") {
  // Meridian plus a small circle around a hole in the annulus, merging into
  // one meridian: two curve components become one.
  SurfaceComplex t = grid_torus(6);
  Hypersurface m1 = torus_meridian(t, 6, 1);
  Hypersurface m3 = torus_meridian(t, 6, 3);
  int hole = 2 * (1 * 6 + 4);  // lower triangle of square (4,1)
  Hypersurface circle = region_boundary_outward(t, {hole});
  Hypersurface a = m1;
  for (size_t i = 0; i < circle.cells.size(); ++i) {
    a.cells.push_back(circle.cells[i]);
    a.positive.push_back(circle.positive[i]);
  }
  a = validate_hypersurface(t, a);

  Hypersurface cutset = a;
  for (size_t i = 0; i < m3.cells.size(); ++i) {
    cutset.cells.push_back(m3.cells[i]);
    cutset.positive.push_back(m3.positive[i]);
  }
  cutset = validate_hypersurface(t, cutset);
  CutResult cut = complement_components(t, cutset);
  int pants = cut.chamber_of_top[2 * (0 * 6 + 5)];  // square (5,0): in the west annulus
  REQUIRE(verify_cobordism(t, {pants}, a, m3));
  SweepResult res = sweep_cobordism(t, {pants}, a, m3);
  auto counts = kind_counts(res.trace);
  CHECK(counts[EventKind::saddle] == 1);
  CHECK(counts[EventKind::birth] == 0);
  CHECK(counts[EventKind::death] == 0);
  check_trace_coherence(res.complex, res.trace, a, m3);
}

TEST_CASE("tube fixture sweep has one death and one birth") {
  TubeFixture f;
  REQUIRE(f.w.size() == 3);
  CHECK(verify_cobordism(f.m, f.w, f.a, f.b));
  SweepResult res = sweep_cobordism(f.m, f.w, f.a, f.b);
  auto counts = kind_counts(res.trace);
  CHECK(counts[EventKind::death] == 1);
  CHECK(counts[EventKind::birth] == 1);
  check_trace_coherence(res.complex, res.trace, f.a, f.b);
}

TEST_CASE("reorder_events: already sorted stays put, extremes bubble") {
  SurfaceComplex s2 = octahedron();
  Hypersurface eq = curve_from_walk(s2, {1, 2, 3, 4});
  SweepResult disk = sweep_cobordism(s2, {0}, eq, Hypersurface{});
  EventTrace sorted = reorder_events(s2, disk.trace);
  CHECK(sorted.normal_form);
  CHECK(sorted.events.size() == disk.trace.events.size());

  TubeFixture f;
  SweepResult res = sweep_cobordism(f.m, f.w, f.a, f.b);
  // The death precedes the birth in the sweep; reorder bubbles the birth in
  // front (their supports are far apart).
  EventTrace ordered = reorder_events(res.complex, res.trace);
  CHECK(ordered.normal_form);
  int birth_at = -1, death_at = -1;
  for (size_t i = 0; i < ordered.events.size(); ++i) {
    if (ordered.events[i].kind == EventKind::birth) birth_at = static_cast<int>(i);
    if (ordered.events[i].kind == EventKind::death) death_at = static_cast<int>(i);
  }
  REQUIRE(birth_at != -1);
  REQUIRE(death_at != -1);
  CHECK(birth_at < death_at);
  // Multiset of (kind, index) unchanged.
  auto c0 = kind_counts(res.trace);
  auto c1 = kind_counts(ordered);
  CHECK(c0 == c1);
  check_trace_coherence(res.complex, ordered, f.a, f.b);
}

TEST_CASE("births_deaths_to_tubes rewrites extremes into tube events") {
  // Trace without extremes: unchanged.
  SurfaceComplex t = grid_torus(4);
  Hypersurface m0 = torus_meridian(t, 4, 0);
  Hypersurface m2 = torus_meridian(t, 4, 2);
  DualGraph dg = build_dual_graph(t, m0, m2);
  int wch = dg.edge_data[0].origin == 'A' ? dg.edge_data[0].pos_chamber
                                          : dg.edge_data[0].neg_chamber;
  SweepResult ann = sweep_cobordism(t, {wch}, m0, m2);
  EventTrace same = births_deaths_to_tubes(t, ann.trace);
  CHECK(same.events.size() == ann.trace.events.size());

  TubeFixture f;
  SweepResult res = sweep_cobordism(f.m, f.w, f.a, f.b);
  EventTrace tubes = births_deaths_to_tubes(res.complex, res.trace);
  auto counts = kind_counts(tubes);
  CHECK(counts[EventKind::birth] == 0);
  CHECK(counts[EventKind::death] == 0);
  CHECK(counts[EventKind::saddle] == 2);
  check_trace_coherence(res.complex, tubes, f.a, f.b);

  // Attachments (merging saddles) come before removals after reordering.
  EventTrace ordered = reorder_events(res.complex, tubes);
  std::vector<int> saddle_deltas;
  for (const auto& ev : ordered.events)
    if (ev.kind == EventKind::saddle)
      saddle_deltas.push_back(event_component_delta(res.complex, ev));
  REQUIRE(saddle_deltas.size() == 2);
  CHECK(saddle_deltas[0] == -1);  // tube attachment
  CHECK(saddle_deltas[1] == 1);   // tube removal
  check_trace_coherence(res.complex, ordered, f.a, f.b);
}

TEST_CASE("whole-manifold sweep on the two-triangle sphere") {
  // Empty curve to empty curve across the whole pillow: one birth, one death.
  SurfaceComplex pillow = validate_complex(2, 3, {{0, 1, 2}, {0, 2, 1}}, {});
  CHECK(verify_cobordism(pillow, {0}, Hypersurface{}, Hypersurface{}));
  SweepResult res = sweep_cobordism(pillow, {0}, Hypersurface{}, Hypersurface{});
  auto counts = kind_counts(res.trace);
  CHECK(counts[EventKind::birth] == 1);
  CHECK(counts[EventKind::death] == 1);
  CHECK(counts[EventKind::saddle] == 0);
  check_trace_coherence(res.complex, res.trace, Hypersurface{}, Hypersurface{});
}

TEST_CASE("births_deaths_to_tubes refuses null-homologous snapshots") {
  SurfaceComplex s2 = octahedron();
  Hypersurface eq = curve_from_walk(s2, {1, 2, 3, 4});
  SweepResult disk = sweep_cobordism(s2, {0}, eq, Hypersurface{});
  CHECK_THROWS_WITH_AS(births_deaths_to_tubes(s2, disk.trace), doctest::Contains("NoPath"),
                       Error);
}
