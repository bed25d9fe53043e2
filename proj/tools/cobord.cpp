// Command-line front end: load complexes and hypersurfaces, run the checks
// and pipelines, emit JSON traces and DOT graphs.
//
// Exit codes: 0 success, 2 verified negative (HomologyMismatch, NotBalanced)
// with a witness artifact, 3 input/validation failure, 4 internal invariant
// breach.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "cobord/disjointing.hpp"
#include "cobord/json_io.hpp"
#include "cobord/surgery.hpp"

using nlohmann::json;
using namespace cobord;

namespace {

struct Options {
  std::string complex_path, a_path, b_path, graph_path, orientation_path;
  std::string out;
  std::string format = "json";
  bool verify = false;
  int subdivision_budget = 2;
  int seed = 0;  // placeholder: every code path is deterministic
};

void write_artifact(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw bad_input("cannot write " + opt.out);
  f << text;
}

void write_json(const Options& opt, const json& j) { write_artifact(opt, j.dump(2) + "\n"); }

int run_reverse_graph(const Options& opt) {
  MultiGraph g = graph_from_json(load_json_file(opt.graph_path));
  Orientation o = orientation_from_json(g, load_json_file(opt.orientation_path));
  auto seq = reversal_sequence(g, o);
  if (std::holds_alternative<ClosedWalk>(seq)) {
    json j;
    j["format_version"] = kFormatVersion;
    j["command"] = "reverse-graph";
    j["error"] = "NotBalanced";
    j["witness_cycle"] = walk_to_json(std::get<ClosedWalk>(seq));
    write_json(opt, j);
    return 2;
  }
  const auto& pushes = std::get<std::vector<int>>(seq);
  std::vector<int> counts(g.vertex_count, 0);
  for (int v : pushes) counts[v]++;
  if (opt.verify) {
    Orientation cur = o;
    for (int v : pushes) cur = push_sink(g, cur, v);
    if (!(cur == reverse_orientation(g, o)))
      throw internal_error("re-verification of the push sequence failed");
  }
  json j;
  j["format_version"] = kFormatVersion;
  j["command"] = "reverse-graph";
  j["pushes"] = pushes;
  j["push_counts"] = counts;
  auto hf = height_function(g, o);
  j["heights"] = std::get<HeightFunction>(hf).value;
  write_json(opt, j);
  return 0;
}

int run_check_homology(const Options& opt) {
  SurfaceComplex m = complex_from_json(load_json_file(opt.complex_path));
  Hypersurface a = hypersurface_from_json(m, load_json_file(opt.a_path));
  Hypersurface b = hypersurface_from_json(m, load_json_file(opt.b_path));
  CycleVector za = class_of(m, a), zb = class_of(m, b);
  CycleVector diff = cycle_sub(za, zb);
  bool equal = cycle_is_relative_boundary(m, diff);
  json j;
  j["format_version"] = kFormatVersion;
  j["command"] = "check-homology";
  j["equal"] = equal;
  if (!equal) {
    RelativeBasis basis = relative_basis(m);
    json cells = json::array(), coeffs = json::array();
    for (int i = 0; i < basis.size(); ++i) {
      if (diff.coeff[i] == 0) continue;
      cells.push_back(basis.basis_to_cell[i]);
      coeffs.push_back(diff.coeff[i]);
    }
    j["witness"] = {{"difference_cells", std::move(cells)},
                    {"difference_coefficients", std::move(coeffs)}};
    write_json(opt, j);
    return 2;
  }
  write_json(opt, j);
  return 0;
}

int run_dual_graph(const Options& opt) {
  SurfaceComplex m = complex_from_json(load_json_file(opt.complex_path));
  Hypersurface a = hypersurface_from_json(m, load_json_file(opt.a_path));
  Hypersurface b = hypersurface_from_json(m, load_json_file(opt.b_path));
  DualGraph dg = build_dual_graph(m, a, b);
  if (opt.format == "dot") {
    write_artifact(opt, dual_graph_to_dot(dg));
  } else {
    write_json(opt, dual_graph_to_json(dg));
  }
  return 0;
}

int run_sequence(const Options& opt) {
  SurfaceComplex m = complex_from_json(load_json_file(opt.complex_path));
  Hypersurface a = hypersurface_from_json(m, load_json_file(opt.a_path));
  Hypersurface b = hypersurface_from_json(m, load_json_file(opt.b_path));
  CobordismTrace trace;
  try {
    trace = cobordism_sequence(m, a, b);
  } catch (const Error& e) {
    if (e.code() != "HomologyMismatch") throw;
    json j;
    j["format_version"] = kFormatVersion;
    j["command"] = "sequence";
    j["error"] = "HomologyMismatch";
    CycleVector diff = cycle_sub(class_of(m, a), class_of(m, b));
    RelativeBasis basis = relative_basis(m);
    json cells = json::array(), coeffs = json::array();
    for (int i = 0; i < basis.size(); ++i) {
      if (diff.coeff[i] == 0) continue;
      cells.push_back(basis.basis_to_cell[i]);
      coeffs.push_back(diff.coeff[i]);
    }
    j["witness"] = {{"difference_cells", std::move(cells)},
                    {"difference_coefficients", std::move(coeffs)}};
    write_json(opt, j);
    return 2;
  }
  if (opt.verify) {
    for (const auto& st : trace.steps) {
      if (!verify_cobordism(m, st.cobordism, st.from, st.to))
        throw internal_error("emitted step failed re-verification");
      if (!classes_equal(m, st.from, st.to))
        throw internal_error("emitted step changed the homology class");
    }
  }
  json j = trace_to_json(m, trace);
  j["command"] = "sequence";
  write_json(opt, j);
  return 0;
}

int run_disjoint(const Options& opt) {
  SurfaceComplex m = complex_from_json(load_json_file(opt.complex_path));
  Hypersurface a = hypersurface_from_json(m, load_json_file(opt.a_path));
  Hypersurface b = hypersurface_from_json(m, load_json_file(opt.b_path));
  DisjointingTrace trace;
  try {
    trace = disjointing_sequence(m, a, b);
  } catch (const Error& e) {
    if (e.code() != "HomologyMismatch") throw;
    json j;
    j["format_version"] = kFormatVersion;
    j["command"] = "disjoint";
    j["error"] = "HomologyMismatch";
    write_json(opt, j);
    return 2;
  }
  if (opt.verify) {
    for (size_t i = 0; i + 1 < trace.sequence.size(); ++i) {
      for (int c : trace.sequence[i].cells)
        if (trace.sequence[i + 1].find(c) != -1)
          throw internal_error("consecutive trace entries share a cell");
      if (!classes_equal(trace.complex, trace.sequence[i], trace.sequence[i + 1]))
        throw internal_error("trace entries changed the homology class");
    }
  }
  json j = disjointing_to_json(trace);
  j["command"] = "disjoint";
  write_json(opt, j);
  return 0;
}

int run_surgeries(const Options& opt) {
  SurfaceComplex m = complex_from_json(load_json_file(opt.complex_path));
  Hypersurface a = hypersurface_from_json(m, load_json_file(opt.a_path));
  Hypersurface b = hypersurface_from_json(m, load_json_file(opt.b_path));
  CobordismTrace trace;
  try {
    trace = cobordism_sequence(m, a, b);
  } catch (const Error& e) {
    if (e.code() != "HomologyMismatch") throw;
    json j;
    j["format_version"] = kFormatVersion;
    j["command"] = "surgeries";
    j["error"] = "HomologyMismatch";
    write_json(opt, j);
    return 2;
  }
  json cobordisms = json::array();
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const CobordismStep& st = trace.steps[i];
    SweepResult sweep =
        sweep_cobordism(m, st.cobordism, st.from, st.to, opt.subdivision_budget);
    EventTrace events = reorder_events(sweep.complex, sweep.trace);
    bool tubes_applied = false;
    try {
      EventTrace tubes = births_deaths_to_tubes(sweep.complex, events);
      events = reorder_events(sweep.complex, tubes);
      tubes_applied = true;
    } catch (const Error& e) {
      if (e.code() != "NoPath") throw;
    }
    if (opt.verify) {
      const Hypersurface* prev = &events.start;
      for (const auto& ev : events.events) {
        if (!(ev.before == *prev)) throw internal_error("event snapshots do not chain");
        if (!classes_equal(sweep.complex, ev.before, ev.after))
          throw internal_error("event changed the homology class");
        prev = &ev.after;
      }
    }
    json entry = events_to_json(sweep.complex, events);
    entry["step"] = i;
    entry["pushed_vertex"] = st.pushed_vertex;
    entry["subdivision_rounds"] = sweep.trail.rounds.size();
    entry["tubes_applied"] = tubes_applied;
    cobordisms.push_back(std::move(entry));
  }
  json j;
  j["format_version"] = kFormatVersion;
  j["command"] = "surgeries";
  j["cobordisms"] = std::move(cobordisms);
  write_json(opt, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"embedded cobordism sequences on combinatorial 1- and 2-manifolds"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "write the artifact to this path (default: stdout)");
    cmd->add_flag("--verify", opt.verify, "re-run all step checks on the emitted trace");
    cmd->add_option("--subdivision-budget", opt.subdivision_budget,
                    "extra barycentric rounds allowed for stuck sweeps")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", opt.seed, "unused placeholder, must stay 0")
        ->check(CLI::Range(0, 0));
  };
  auto add_mab = [&](CLI::App* cmd) {
    cmd->add_option("complex", opt.complex_path, "complex JSON")->required();
    cmd->add_option("a", opt.a_path, "hypersurface A JSON")->required();
    cmd->add_option("b", opt.b_path, "hypersurface B JSON")->required();
    add_common(cmd);
  };

  CLI::App* reverse = app.add_subcommand("reverse-graph", "sink-pushing reversal sequence");
  reverse->add_option("graph", opt.graph_path, "graph JSON")->required();
  reverse->add_option("orientation", opt.orientation_path, "orientation JSON")->required();
  add_common(reverse);

  CLI::App* check = app.add_subcommand("check-homology", "decide [A] = [B] in H_{n-1}(M, dM)");
  add_mab(check);

  CLI::App* dual = app.add_subcommand("dual-graph", "chamber graph of M cut along A u B");
  add_mab(dual);
  dual->add_option("--format", opt.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  CLI::App* sequence = app.add_subcommand("sequence", "verified cobordism sequence A -> B");
  add_mab(sequence);

  CLI::App* disjoint = app.add_subcommand("disjoint", "sequentially disjoint hypersurfaces");
  add_mab(disjoint);

  CLI::App* surgeries = app.add_subcommand("surgeries", "surgery events for every step");
  add_mab(surgeries);

  CLI11_PARSE(app, argc, argv);

  try {
    if (reverse->parsed()) return run_reverse_graph(opt);
    if (check->parsed()) return run_check_homology(opt);
    if (dual->parsed()) return run_dual_graph(opt);
    if (sequence->parsed()) return run_sequence(opt);
    if (disjoint->parsed()) return run_disjoint(opt);
    if (surgeries->parsed()) return run_surgeries(opt);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == "InternalError") return 4;
    if (e.code() == "HomologyMismatch" || e.code() == "NotBalanced") return 2;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 4;
  }
  return 3;
}
