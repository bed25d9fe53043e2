#include "cobord/surgery.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "cobord/refine.hpp"

namespace cobord {

const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::slide: return "slide";
    case EventKind::birth: return "birth";
    case EventKind::saddle: return "saddle";
    case EventKind::death: return "death";
  }
  return "?";
}

namespace {

using Chain = std::map<int, int>;  // edge -> coefficient, zeros erased

Chain hyp_chain(const SurfaceComplex& m, const Hypersurface& h) {
  Chain c;
  for (size_t i = 0; i < h.cells.size(); ++i) {
    int e = h.cells[i];
    c[e] = h.positive[i] == m.edge_tri_inducing[e] ? 1 : -1;
  }
  return c;
}

// The curve of a chain; every coefficient must be +-1.
Hypersurface chain_hyp(const SurfaceComplex& m, const Chain& c) {
  Hypersurface h;
  for (auto& [e, coeff] : c) {
    if (coeff != 1 && coeff != -1) throw internal_error("chain is not a curve");
    h.cells.push_back(e);
    h.positive.push_back(coeff == 1 ? m.edge_tri_inducing[e] : m.edge_tri_anti[e]);
  }
  return validate_hypersurface(m, h);
}

int boundary_coeff(const SurfaceComplex& m, int tri, int e) {
  return m.edge_tri_inducing[e] == tri ? 1 : -1;
}

// cur -/+ sum of triangle boundaries; forward advances the curve across the
// triangles.
Chain apply_region(const SurfaceComplex& m, const Chain& cur, const std::vector<int>& tris,
                   bool forward) {
  Chain c = cur;
  for (int t : tris) {
    for (int e : m.tri_edges[t]) {
      int& v = c[e];
      v += (forward ? -1 : 1) * boundary_coeff(m, t, e);
      if (v == 0) c.erase(e);
    }
  }
  return c;
}

int component_count(const SurfaceComplex& m, const Hypersurface& h) {
  return static_cast<int>(hypersurface_components(m, h).size());
}

// Attempt the next sweep step on triangle t. Returns the emitted event, or
// nothing when t must wait.
struct StepOutcome {
  bool ok = false;
  SurgeryEvent event;
};

StepOutcome try_step(const SurfaceComplex& m, const Chain& cur, const Hypersurface& cur_h,
                     int t, const std::set<int>& available) {
  StepOutcome out;
  // Every curve edge of t must be co-oriented into t.
  std::vector<int> shared;
  for (int e : m.tri_edges[t]) {
    auto it = cur.find(e);
    if (it == cur.end()) continue;
    if (it->second != boundary_coeff(m, t, e)) return out;  // curve points away
    shared.push_back(e);
  }
  int k = static_cast<int>(shared.size());
  std::map<int, int> vertex_degree;
  for (auto& [e, coeff] : cur) {
    vertex_degree[m.edges[e][0]]++;
    vertex_degree[m.edges[e][1]]++;
  }

  auto finish = [&](EventKind kind, int index, std::vector<int> support) {
    Chain next = apply_region(m, cur, support, true);
    Hypersurface after;
    try {
      after = chain_hyp(m, next);
    } catch (const Error&) {
      return false;  // defer: the move would leave a non-elementary frontier
    }
    int delta = component_count(m, after) - component_count(m, cur_h);
    int want = kind == EventKind::slide ? 0 : kind == EventKind::birth ? 1 : kind == EventKind::death ? -1 : 0;
    if (kind == EventKind::saddle) {
      if (delta != 1 && delta != -1) return false;
    } else if (delta != want) {
      return false;
    }
    out.ok = true;
    out.event.kind = kind;
    out.event.index = index;
    out.event.support = std::move(support);
    out.event.forward = true;
    out.event.before = cur_h;
    out.event.after = std::move(after);
    return true;
  };

  if (k == 3) {
    finish(EventKind::death, 2, {t});
    return out;
  }
  if (k == 2) {
    finish(EventKind::slide, -1, {t});
    return out;
  }
  if (k == 0) {
    for (int v : m.triangles[t])
      if (vertex_degree.count(v)) return out;  // defer: fresh region touching the curve
    finish(EventKind::birth, 0, {t});
    return out;
  }
  // k == 1: slide if the opposite vertex is free, otherwise a saddle with an
  // atomic fan completion at that vertex.
  int se = shared[0];
  int p = m.tri_third_vertex(t, m.edges[se][0], m.edges[se][1]);
  if (!vertex_degree.count(p)) {
    finish(EventKind::slide, -1, {t});
    return out;
  }
  // Fans at p between consecutive curve spokes; each candidate is a maximal
  // run of available triangles bounded by curve edges at p.
  const auto& link = m.link_verts[p];
  int L = static_cast<int>(link.size());
  auto fan_tri = [&](int j) { return m.inducing_triangle(link[j], link[(j + 1) % L]); };
  auto spoke_on_curve = [&](int j) {
    int e = m.edge_id(p, link[j]);
    return cur.count(e) > 0;
  };
  std::vector<std::vector<int>> fans;
  for (int s = 0; s < L; ++s) {
    if (!spoke_on_curve(s)) continue;
    std::vector<int> fan;
    bool closed_fan = false;
    for (int j = s; ; j = (j + 1) % L) {
      int ft = fan_tri(j);
      if (ft == -1) break;
      fan.push_back(ft);
      if (spoke_on_curve((j + 1) % L)) {
        closed_fan = true;
        break;
      }
      if ((j + 1) % L == s) break;
    }
    if (closed_fan && !fan.empty()) fans.push_back(std::move(fan));
  }
  std::sort(fans.begin(), fans.end());
  for (auto& fan : fans) {
    if (std::find(fan.begin(), fan.end(), t) == fan.end()) continue;
    bool usable = true;
    for (int ft : fan) usable = usable && available.count(ft) > 0;
    if (!usable) continue;
    std::vector<int> support = fan;
    std::sort(support.begin(), support.end());
    if (finish(EventKind::saddle, 1, support)) return out;
  }
  return out;
}

}  // namespace

int event_component_delta(const SurfaceComplex& m, const SurgeryEvent& ev) {
  return component_count(m, ev.after) - component_count(m, ev.before);
}

SweepResult sweep_cobordism(const SurfaceComplex& m, const std::vector<int>& w,
                            const Hypersurface& a, const Hypersurface& b,
                            int subdivision_budget) {
  if (m.dimension != 2) throw bad_input("sweeps are defined on dimension-2 complexes");
  if (!verify_cobordism(m, w, a, b))
    throw bad_input("w is not a cobordism from a to b");

  SweepResult res;
  res.complex = m;
  // Chamber ids -> triangle set of w (chambers of the (a u b) cut).
  Hypersurface cut_union = validate_hypersurface(m, a);
  {
    Hypersurface bb = validate_hypersurface(m, b);
    for (size_t i = 0; i < bb.cells.size(); ++i) {
      if (cut_union.find(bb.cells[i]) != -1) continue;
      cut_union.cells.push_back(bb.cells[i]);
      cut_union.positive.push_back(bb.positive[i]);
    }
    canonicalize(cut_union);
  }
  CutResult cut = complement_components(m, cut_union);
  std::vector<int> region;
  for (int id : w)
    for (int t : cut.chambers[id].top_cells) region.push_back(t);
  std::sort(region.begin(), region.end());

  Hypersurface a_cur = validate_hypersurface(m, a);
  Hypersurface b_cur = validate_hypersurface(m, b);

  for (int attempt = 0;; ++attempt) {
    const SurfaceComplex& K = res.trail.rounds.empty() ? m : res.trail.rounds.back().fine;
    try {
      std::set<int> todo(region.begin(), region.end());
      Chain cur = hyp_chain(K, a_cur);
      Hypersurface cur_h = a_cur;

      // Breadth-first order from the a-adjacent triangles of the region.
      std::map<int, int> dist;
      std::deque<int> q;
      for (size_t i = 0; i < a_cur.cells.size(); ++i) {
        auto [neg, pos] = cell_side_tops(K, a_cur.cells[i], a_cur.positive[i]);
        if (todo.count(pos) && !dist.count(pos)) {
          dist[pos] = 0;
          q.push_back(pos);
        }
      }
      while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (int e : K.tri_edges[t]) {
          if (K.edge_on_boundary(e)) continue;
          int other = K.edge_tri_inducing[e] == t ? K.edge_tri_anti[e] : K.edge_tri_inducing[e];
          if (todo.count(other) && !dist.count(other)) {
            dist[other] = dist[t] + 1;
            q.push_back(other);
          }
        }
      }
      std::vector<int> order(region.begin(), region.end());
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        int dx = dist.count(x) ? dist[x] : 1 << 20;
        int dy = dist.count(y) ? dist[y] : 1 << 20;
        if (dx != dy) return dx < dy;
        return x < y;
      });

      EventTrace trace;
      trace.start = a_cur;
      while (!todo.empty()) {
        bool progressed = false;
        for (int t : order) {
          if (!todo.count(t)) continue;
          StepOutcome step = try_step(K, cur, cur_h, t, todo);
          if (!step.ok) continue;
          for (int st : step.event.support) todo.erase(st);
          cur = apply_region(K, cur, step.event.support, true);
          cur_h = step.event.after;
          trace.events.push_back(std::move(step.event));
          progressed = true;
          break;
        }
        if (!progressed) throw sweep_stuck("no processable triangle remains");
      }
      if (!(cur_h == b_cur))
        throw internal_error("sweep consumed the cobordism but missed the target curve");
      trace.end = b_cur;
      res.complex = K;
      res.trace = std::move(trace);
      return res;
    } catch (const Error& e) {
      if (e.code() != "SweepStuck" || attempt >= subdivision_budget) throw;
      Subdivision sub = barycentric_subdivide(K);
      a_cur = sub.carry(K, a_cur);
      b_cur = sub.carry(K, b_cur);
      region = sub.carry_region(region);
      res.trail.rounds.push_back(std::move(sub));
    }
  }
}

namespace {

// Sort keys: births, then merging saddles (tube attachments), then splitting
// saddles (tube removals), then deaths. Slides drift right.
int sort_key(const SurfaceComplex& m, const SurgeryEvent& ev) {
  switch (ev.kind) {
    case EventKind::birth: return 0;
    case EventKind::saddle: return event_component_delta(m, ev) < 0 ? 1 : 2;
    case EventKind::death: return 3;
    case EventKind::slide: return 1 << 10;
  }
  return 1 << 10;
}

bool supports_disjoint(const SurgeryEvent& x, const SurgeryEvent& y) {
  for (int t : x.support)
    for (int u : y.support)
      if (t == u) return false;
  return true;
}

}  // namespace

EventTrace reorder_events(const SurfaceComplex& m, const EventTrace& trace) {
  EventTrace out = trace;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < out.events.size(); ++i) {
      SurgeryEvent& e1 = out.events[i];
      SurgeryEvent& e2 = out.events[i + 1];
      if (sort_key(m, e1) <= sort_key(m, e2)) continue;
      if (!supports_disjoint(e1, e2)) continue;
      // Swapped middle snapshot: apply e2's region change first.
      Chain mid = apply_region(m, hyp_chain(m, e1.before), e2.support, e2.forward);
      Hypersurface mid_h;
      try {
        mid_h = chain_hyp(m, mid);
      } catch (const Error&) {
        continue;
      }
      SurgeryEvent n1 = e2, n2 = e1;
      n1.before = e1.before;
      n1.after = mid_h;
      n2.before = mid_h;
      n2.after = e2.after;
      if (event_component_delta(m, n1) != event_component_delta(m, e2)) continue;
      if (event_component_delta(m, n2) != event_component_delta(m, e1)) continue;
      e1 = std::move(n1);
      e2 = std::move(n2);
      changed = true;
    }
  }
  out.normal_form = true;
  int last = -1;
  for (const auto& ev : out.events) {
    if (ev.kind == EventKind::slide) continue;
    int key = sort_key(m, ev);
    if (key < last) out.normal_form = false;
    last = std::max(last, key);
  }
  return out;
}

namespace {

// Replacement for a forward birth: a finger of slides grows from the curve
// toward the born circle's triangle, slides across it, a backward saddle
// pinches the circle off, and backward slides retract the finger. The finger
// is grown greedily by distance to the target, taking only moves whose
// snapshot validates, so pinching routes are sidestepped automatically.
std::vector<SurgeryEvent> birth_replacement(const SurfaceComplex& m, const SurgeryEvent& ev) {
  if (ev.support.size() != 1) throw internal_error("birth support is one triangle");
  int t0 = ev.support[0];

  // Distance field toward t0, steering the greedy growth. It never crosses
  // the curve, so the finger is guided along a route it can actually take.
  std::set<int> curve_edges(ev.before.cells.begin(), ev.before.cells.end());
  std::map<int, int> dist;
  {
    std::deque<int> q{t0};
    dist[t0] = 0;
    while (!q.empty()) {
      int t = q.front();
      q.pop_front();
      for (int e : m.tri_edges[t]) {
        if (m.edge_on_boundary(e) || curve_edges.count(e)) continue;
        int other = m.edge_tri_inducing[e] == t ? m.edge_tri_anti[e] : m.edge_tri_inducing[e];
        if (!dist.count(other)) {
          dist[other] = dist[t] + 1;
          q.push_back(other);
        }
      }
    }
  }

  std::vector<SurgeryEvent> events;
  Chain cur = hyp_chain(m, ev.before);
  Hypersurface cur_h = ev.before;
  auto attempt = [&](EventKind kind, int index, std::vector<int> support, bool forward,
                     int want_delta) {
    Chain next = apply_region(m, cur, support, forward);
    Hypersurface next_h;
    try {
      next_h = chain_hyp(m, next);
    } catch (const Error&) {
      return false;
    }
    if (component_count(m, next_h) - component_count(m, cur_h) != want_delta) return false;
    SurgeryEvent e;
    e.kind = kind;
    e.index = index;
    e.support = std::move(support);
    e.forward = forward;
    e.before = cur_h;
    e.after = next_h;
    cur = std::move(next);
    cur_h = e.after;
    events.push_back(std::move(e));
    return true;
  };

  std::vector<int> finger;  // in order of addition
  std::set<int> in_finger;
  int guard = m.top_count();
  while (true) {
    if (--guard < 0) throw no_path("finger growth failed to reach the born circle");
    if (attempt(EventKind::slide, -1, {t0}, true, 0)) break;
    // Grow by the processable triangle nearest the target.
    std::vector<int> candidates;
    for (auto& [t, d] : dist)
      if (t != t0 && !in_finger.count(t)) candidates.push_back(t);
    std::sort(candidates.begin(), candidates.end(), [&](int x, int y) {
      if (dist[x] != dist[y]) return dist[x] < dist[y];
      return x < y;
    });
    bool grown = false;
    for (int t : candidates) {
      // Only curve-adjacent additions validate as slides.
      if (attempt(EventKind::slide, -1, {t}, true, 0)) {
        finger.push_back(t);
        in_finger.insert(t);
        grown = true;
        break;
      }
    }
    if (!grown) throw no_path("no corridor from the curve reaches the born circle");
  }

  // Retract the finger, deferring removals that would pinch the curve.
  // Exactly one removal separates the circle: the index-1 tube event. When no
  // single triangle comes off cleanly, the remaining neck is removed in one
  // atomic move (a saddle with several support triangles).
  int splits = 0;
  std::vector<int> remaining(finger.rbegin(), finger.rend());
  while (!remaining.empty()) {
    bool progressed = false;
    for (size_t i = 0; i < remaining.size(); ++i) {
      int t = remaining[i];
      if (attempt(EventKind::slide, -1, {t}, false, 0) ||
          (splits == 0 && attempt(EventKind::saddle, 1, {t}, false, 1) && ++splits)) {
        remaining.erase(remaining.begin() + i);
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      std::vector<int> rest(remaining.begin(), remaining.end());
      std::sort(rest.begin(), rest.end());
      if (splits == 0 && attempt(EventKind::saddle, 1, rest, false, 1)) {
        ++splits;
        remaining.clear();
      } else if (attempt(EventKind::slide, -1, rest, false, 0)) {
        remaining.clear();
      } else {
        throw no_path("finger retraction failed");
      }
    }
  }
  if (splits != 1) throw no_path("finger retraction did not pinch off exactly one circle");
  if (!(cur_h == ev.after)) throw internal_error("birth replacement missed the target");
  return events;
}

}  // namespace

EventTrace births_deaths_to_tubes(const SurfaceComplex& m, const EventTrace& trace) {
  bool has_extreme = false;
  for (const auto& ev : trace.events)
    has_extreme = has_extreme || ev.kind == EventKind::birth || ev.kind == EventKind::death;
  if (!has_extreme) return trace;

  auto class_ok = [&](const Hypersurface& h) {
    if (h.empty()) return false;
    CycleVector z = class_of(m, h);
    return !cycle_is_relative_boundary(m, z);
  };
  for (const auto& ev : trace.events) {
    if (!class_ok(ev.before) || !class_ok(ev.after))
      throw no_path("a snapshot is empty or null-homologous; tube rewriting needs "
                    "hypersurfaces of nonzero class");
  }
  EventTrace out;
  out.start = trace.start;
  out.end = trace.end;
  for (const auto& ev : trace.events) {
    if (ev.kind == EventKind::birth && ev.forward) {
      auto repl = birth_replacement(m, ev);
      out.events.insert(out.events.end(), repl.begin(), repl.end());
    } else if (ev.kind == EventKind::death && ev.forward) {
      // A death is a birth run backwards with all co-orientations flipped:
      // the dying circle sits behind the curve, so the finger must grow on
      // the negative side, which the flipped world turns into the usual
      // positive-side growth.
      SurgeryEvent flipped = ev;
      flipped.kind = EventKind::birth;
      flipped.before = reverse_hypersurface(m, ev.after);
      flipped.after = reverse_hypersurface(m, ev.before);
      auto repl = birth_replacement(m, flipped);
      std::reverse(repl.begin(), repl.end());
      for (auto& r : repl) {
        Hypersurface nb = reverse_hypersurface(m, r.after);
        Hypersurface na = reverse_hypersurface(m, r.before);
        r.before = std::move(nb);
        r.after = std::move(na);
      }
      out.events.insert(out.events.end(), repl.begin(), repl.end());
    } else {
      out.events.push_back(ev);
    }
  }
  return out;
}

}  // namespace cobord
