// Command-line front end: analyze, solvable, run, adversary, generate.
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "planeform/adversary.hpp"
#include "planeform/decomposition.hpp"
#include "planeform/error.hpp"
#include "planeform/formation.hpp"
#include "planeform/generators.hpp"
#include "planeform/scenario.hpp"
#include "planeform/simulation.hpp"
#include "planeform/solvability.hpp"
#include "planeform/symmetry.hpp"

namespace {

using namespace planeform;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_scenario_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    if (line[a] == '#') continue;
    return line.compare(a, 20, "planeform scenario 1") == 0;
  }
  return false;
}

std::vector<Point3> load_points(const std::string& path) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  if (is_scenario_text(text)) return scenario_points(parse_scenario(in));
  return parse_points(in);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

std::string orbit_summary(const OrbitDecomposition& dec) {
  std::ostringstream out;
  out << "[";
  for (std::size_t k = 0; k < dec.orbits.size(); ++k) {
    if (k) out << ", ";
    out << dec.orbits[k].size() << " (folding " << dec.foldings[k] << ")";
  }
  out << "]";
  return out.str();
}

std::string describe_verdict(const Verdict& v) {
  std::ostringstream out;
  out << "solvable: " << (v.solvable ? "yes" : "no") << "\n";
  if (v.witness_group) out << "witness: adversary group " << to_string(*v.witness_group) << "\n";
  if (v.witness_orbit) out << "witness: breakable orbit index " << *v.witness_orbit << "\n";
  return out.str();
}

bool trace_passes(const Trace& trace, const Tolerance& tol) {
  if (!trace.terminal() || trace.entries.empty()) return false;
  const TerminalReport r = verify_terminal(trace.entries.back().configuration, tol);
  return r.coplanar && r.distinct;
}

int cmd_analyze(const std::string& file, double tol_rel) {
  const Tolerance tol{tol_rel, Tolerance{}.abs};
  const std::vector<Point3> pts = load_points(file);
  std::cout << "n: " << pts.size() << "\n";
  try {
    const OrbitDecomposition dec = gamma_decomposition(pts, tol);
    std::cout << "group: " << to_string(dec.group) << ", order " << dec.group.order << "\n";
    std::cout << "orbits: " << orbit_summary(dec) << "\n";
    std::cout << "radius: " << dec.outer.radius << "\n";
  } catch (const Error& e) {
    std::cout << "decomposition: unavailable (" << e.what() << ")\n";
  }
  std::cout << describe_verdict(check_solvable(pts, tol));
  return kExitOk;
}

int cmd_solvable(const std::string& file, double tol_rel) {
  const Tolerance tol{tol_rel, Tolerance{}.abs};
  std::cout << describe_verdict(check_solvable(load_points(file), tol));
  return kExitOk;
}

int cmd_generate(const std::string& name, double radius, const std::string& out_path) {
  const std::vector<Point3> pts = generate_polyhedron(name, radius);
  std::ostringstream out;
  write_points(out, pts);
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    write_file(out_path, out.str());
    std::cout << "wrote " << pts.size() << " points to " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_run(const std::string& file, double tol_rel, bool tol_set, std::uint64_t seed,
            bool seed_set, std::size_t cycles, bool cycles_set, std::string out_path) {
  const std::string text = slurp(file);
  Scenario s;
  if (is_scenario_text(text)) {
    std::istringstream in(text);
    s = parse_scenario(in);
  } else {
    std::istringstream in(text);
    s.points = parse_points(in);
  }
  if (tol_set) s.tol_rel = tol_rel;
  if (seed_set) s.seed = seed;
  if (cycles_set) s.max_cycles = cycles;

  const Tolerance tol = s.tolerance();
  const std::vector<Point3> pts = scenario_points(s);
  const std::vector<Frame> frames = scenario_frames(s, pts);
  const Algorithm alg = make_algorithm(s.algorithm, tol);
  const Trace trace = run(pts, frames, alg, s.max_cycles, tol);

  std::cout << format_report(trace, tol);
  if (out_path.empty()) out_path = file + ".trace";
  std::ostringstream traw;
  write_trace(traw, trace, s.algorithm, s.seed);
  write_file(out_path, traw.str());
  std::cout << "trace: " << out_path << "\n";
  return trace_passes(trace, tol) ? kExitOk : kExitVerification;
}

int cmd_adversary(const std::string& file, double tol_rel, std::uint64_t seed,
                  std::size_t cycles, const std::string& out_path,
                  std::string algorithm) {
  const Tolerance tol{tol_rel, Tolerance{}.abs};
  const std::vector<Point3> pts = load_points(file);
  const GroupKind target = adversary_group(pts, tol);
  const AdversaryPlan plan = build_adversary(pts, target, seed, tol);

  if (algorithm.empty())
    algorithm = is_regular_polyhedron(pts, tol) ? "go_to_midpoint" : "plane_formation";
  const Algorithm alg = make_algorithm(algorithm, tol, /*guard_unsolvable=*/false);
  const Trace trace = run(pts, plan.frames, alg, cycles, tol);

  std::size_t orbits = 0;
  for (std::size_t id : plan.orbit_of) orbits = std::max(orbits, id + 1);
  std::cout << "adversary group: " << to_string(target) << " (order "
            << plan.embedding.size() << ", " << orbits << " orbit"
            << (orbits == 1 ? "" : "s") << ")\n";
  std::cout << "algorithm: " << algorithm << "\n";

  const Point3 center = smallest_enclosing_ball(pts).center;
  bool closure = true;
  bool ever_planar = false;
  for (const TraceEntry& e : trace.entries) {
    for (const RotationOp& g : plan.embedding) {
      if (!preserves_configuration(e.configuration, g.matrix, center, tol)) closure = false;
    }
    if (e.coplanar) ever_planar = true;
  }
  std::cout << "cycles observed: " << trace.entries.size() << "\n";
  std::cout << "symmetry closure (gamma contains " << to_string(target)
            << "): " << (closure ? "every cycle" : "VIOLATED") << "\n";
  std::cout << "planar: " << (ever_planar ? "REACHED" : "never") << "\n";

  if (!out_path.empty()) {
    std::ostringstream traw;
    write_trace(traw, trace, algorithm, seed);
    write_file(out_path, traw.str());
    std::cout << "trace: " << out_path << "\n";
  }
  const bool demonstrated = closure && !ever_planar && !trace.terminal();
  std::cout << (demonstrated ? "DEMONSTRATED" : "FAILED") << "\n";
  return demonstrated ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plane formation for synchronous mobile robots in 3D"};
  app.require_subcommand(1);

  std::string file, name, out_path, algorithm;
  double tol_rel = Tolerance{}.rel;
  double radius = 1.0;
  std::uint64_t seed = 0;
  std::size_t cycles = 0;

  auto* analyze = app.add_subcommand("analyze", "classify a point set");
  analyze->add_option("file", file, "points or scenario file")->required();
  analyze->add_option("--tol", tol_rel, "relative tolerance");

  auto* solvable = app.add_subcommand("solvable", "plane formability verdict");
  solvable->add_option("file", file, "points or scenario file")->required();
  solvable->add_option("--tol", tol_rel, "relative tolerance");

  auto* generate = app.add_subcommand("generate", "emit a named vertex set");
  generate->add_option("name", name, "generator name, e.g. cube or prism(6)")->required();
  generate->add_option("--radius", radius, "circumradius");
  generate->add_option("--out", out_path, "output file (default stdout)");

  auto* runc = app.add_subcommand("run", "run a scenario");
  runc->add_option("file", file, "scenario or points file")->required();
  auto* run_tol = runc->add_option("--tol", tol_rel, "relative tolerance override");
  auto* run_seed = runc->add_option("--seed", seed, "seed override");
  auto* run_cycles =
      runc->add_option("--max-cycles,--cycles", cycles, "cycle limit override");
  runc->add_option("--out", out_path, "trace file (default <input>.trace)");

  auto* adv = app.add_subcommand("adversary", "demonstrate an impossibility execution");
  adv->add_option("file", file, "points or scenario file")->required();
  adv->add_option("--tol", tol_rel, "relative tolerance");
  adv->add_option("--seed", seed, "base frame seed");
  adv->add_option("--max-cycles,--cycles", cycles, "cycles to run")->default_val(50);
  adv->add_option("--out", out_path, "trace file");
  adv->add_option("--algorithm", algorithm, "override the demonstrated algorithm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(file, tol_rel);
    if (solvable->parsed()) return cmd_solvable(file, tol_rel);
    if (generate->parsed()) return cmd_generate(name, radius, out_path);
    if (runc->parsed())
      return cmd_run(file, tol_rel, run_tol->count() > 0, seed, run_seed->count() > 0,
                     cycles, run_cycles->count() > 0, out_path);
    if (adv->parsed()) return cmd_adversary(file, tol_rel, seed, cycles, out_path, algorithm);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
