#include "planeform/scenario.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "planeform/generators.hpp"

using namespace planeform;

namespace {

Scenario parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}

std::string write_text(const Scenario& s) {
  std::ostringstream out;
  write_scenario(out, s);
  return out.str();
}

}  // namespace

TEST_SUITE_BEGIN("scenario");

TEST_CASE("scenarios survive a write and parse round trip") {
  Scenario s;
  s.algorithm = "go_to_midpoint";
  s.frames = FrameSpec::Identity;
  s.seed = 12345;
  s.max_cycles = 7;
  s.tol_rel = 1e-8;
  s.points = generate_polyhedron("icosahedron");

  const Scenario back = parse_text(write_text(s));
  CHECK(back.algorithm == s.algorithm);
  CHECK(back.frames == s.frames);
  CHECK(back.seed == s.seed);
  CHECK(back.max_cycles == s.max_cycles);
  CHECK(back.tol_rel == s.tol_rel);
  CHECK(back.generator.empty());
  REQUIRE(back.points.size() == s.points.size());
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    CHECK(back.points[i].x == s.points[i].x);
    CHECK(back.points[i].y == s.points[i].y);
    CHECK(back.points[i].z == s.points[i].z);
  }

  Scenario g;
  g.generator = "dodecahedron";
  g.radius = 2.5;
  g.frames = FrameSpec::Adversarial;
  const Scenario gback = parse_text(write_text(g));
  CHECK(gback.generator == "dodecahedron");
  CHECK(gback.radius == 2.5);
  CHECK(gback.frames == FrameSpec::Adversarial);
  CHECK(gback.points.empty());
}

TEST_CASE("normalization is stable across comments ordering and whitespace") {
  const std::string messy =
      "planeform scenario 1\n"
      "# a comment\n"
      "\n"
      "cycles 4\n"
      "  seed 9  \n"
      "generator cube 1\n"
      "algorithm plane_formation\n";
  const std::string clean =
      "planeform scenario 1\n"
      "algorithm plane_formation\n"
      "seed 9\n"
      "cycles 4\n"
      "generator cube 1\n";
  CHECK(normalize_scenario(messy) == normalize_scenario(clean));
  CHECK(normalize_scenario(normalize_scenario(messy)) == normalize_scenario(messy));
  CHECK(normalize_scenario(messy).find("generator cube 1\n") != std::string::npos);
  CHECK(normalize_scenario(messy).rfind("planeform scenario 1\n", 0) == 0);
}

TEST_CASE("parse errors carry the offending line") {
  CHECK_THROWS_WITH_AS(parse_text(""), "scenario parse error: line 0: empty input", Error);
  CHECK_THROWS_WITH_AS(
      parse_text("bogus\n"),
      "scenario parse error: line 1: expected header 'planeform scenario 1'", Error);
  CHECK_THROWS_WITH_AS(parse_text("planeform scenario 1\nbogus 3\n"),
                       "scenario parse error: line 2: unknown field 'bogus'", Error);
  CHECK_THROWS_WITH_AS(parse_text("planeform scenario 1\ntol abc\ngenerator cube 1\n"),
                       "scenario parse error: line 2: bad number 'abc'", Error);
  CHECK_THROWS_WITH_AS(parse_text("planeform scenario 1\nseed 1\n"),
                       "scenario parse error: line 2: scenario has no points or generator",
                       Error);
  CHECK_THROWS_WITH_AS(parse_text("planeform scenario 1\npoints 1\n1 2 3 4\n"),
                       "scenario parse error: line 3: trailing content '4'", Error);
  CHECK_THROWS_WITH_AS(parse_text("planeform scenario 1\ngenerator cube 1\npoints 1\n1 2 3\n"),
                       "scenario parse error: line 3: duplicate point source", Error);
  CHECK_THROWS_WITH_AS(parse_text("planeform scenario 1\nframes sideways\ngenerator cube\n"),
                       "scenario parse error: line 2: unknown frame spec 'sideways'", Error);
}

TEST_CASE("plain point lists round trip and tolerate comments") {
  const std::vector<Point3> pts = generate_polyhedron("truncated_tetrahedron");
  std::ostringstream out;
  write_points(out, pts);
  std::istringstream in("# header comment\n\n" + out.str());
  const std::vector<Point3> back = parse_points(in);
  REQUIRE(back.size() == pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(distance(back[i], pts[i]) == 0.0);

  std::istringstream bad("1 2\n");
  CHECK_THROWS_WITH_AS(parse_points(bad), "scenario parse error: line 1: expected 'x y z'",
                       Error);
}

TEST_CASE("scenario points come from the generator or the explicit list") {
  Scenario g;
  g.generator = "icosahedron";
  g.radius = 0.5;
  const std::vector<Point3> expect = generate_polyhedron("icosahedron", 0.5);
  const std::vector<Point3> got = scenario_points(g);
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(distance(got[i], expect[i]) == 0.0);

  Scenario e;
  e.points = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  CHECK(scenario_points(e).size() == 3);

  Scenario empty;
  CHECK_THROWS_WITH_AS(scenario_points(empty), "scenario has no points or generator", Error);

  Scenario dup;
  dup.points = {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}};
  CHECK_THROWS_WITH_AS(scenario_points(dup), "point multiplicity", Error);
}

TEST_CASE("scenario frames honour the frame specification") {
  Scenario s;
  s.generator = "icosahedron";
  s.seed = 3;
  const std::vector<Point3> pts = scenario_points(s);

  s.frames = FrameSpec::Identity;
  for (const Frame& f : scenario_frames(s, pts)) {
    CHECK(max_abs_diff(f.rotation, Mat3::identity()) == 0.0);
    CHECK(f.scale == 1.0);
  }

  s.frames = FrameSpec::Random;
  const std::vector<Frame> r1 = scenario_frames(s, pts);
  const std::vector<Frame> r2 = scenario_frames(s, pts);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(max_abs_diff(r1[i].rotation, r2[i].rotation) == 0.0);

  s.frames = FrameSpec::Adversarial;
  CHECK(scenario_frames(s, pts).size() == pts.size());

  Scenario t;
  t.generator = "tetrahedron";
  t.frames = FrameSpec::Adversarial;
  const std::vector<Point3> tet = scenario_points(t);
  CHECK_THROWS_WITH_AS(scenario_frames(t, tet), "no adversary exists", Error);
}

TEST_CASE("named algorithms dispatch and guard as requested") {
  const Tolerance tol;
  CHECK_THROWS_WITH_AS(make_algorithm("nope", tol), "unknown algorithm 'nope'", Error);

  const std::vector<Point3> icosa = generate_polyhedron("icosahedron");
  const std::vector<Frame> frames = identity_frames(icosa);

  const Trace guarded = run(icosa, frames, make_algorithm("plane_formation", tol), 3, tol);
  CHECK(guarded.halt == HaltReason::Error);
  CHECK(guarded.error == "unsolvable input");

  const Trace lenient =
      run(icosa, frames, make_algorithm("plane_formation", tol, false), 3, tol);
  CHECK(lenient.halt == HaltReason::MaxCycles);
  for (std::size_t i = 0; i < icosa.size(); ++i)
    CHECK(distance(lenient.entries.back().configuration[i], icosa[i]) <= 1e-12);

  // The midpoint walk moves on a regular polyhedron and holds elsewhere.
  const std::vector<Point3> cube = generate_polyhedron("cube");
  const StepResult moved = fsync_step(cube, identity_frames(cube), make_algorithm("go_to_midpoint", tol));
  for (std::size_t i = 0; i < cube.size(); ++i)
    CHECK(distance(moved.positions[i], go_to_midpoint(cube, i)) <= 1e-12);

  const std::vector<Point3> cubocta = generate_polyhedron("cuboctahedron");
  const StepResult held =
      fsync_step(cubocta, identity_frames(cubocta), make_algorithm("go_to_midpoint", tol));
  for (std::size_t i = 0; i < cubocta.size(); ++i)
    CHECK(distance(held.positions[i], cubocta[i]) <= 1e-12);
}

TEST_CASE("trace files are deterministic and versioned") {
  const std::vector<Point3> pts = generate_polyhedron("dodecahedron");
  const Tolerance tol;
  const Algorithm alg = make_algorithm("plane_formation", tol);
  const Trace a = run(pts, random_frames(pts, 42), alg, 6, tol);
  const Trace b = run(pts, random_frames(pts, 42), alg, 6, tol);

  std::ostringstream out_a;
  std::ostringstream out_b;
  write_trace(out_a, a, "plane_formation", 42);
  write_trace(out_b, b, "plane_formation", 42);
  CHECK(out_a.str() == out_b.str());
  CHECK(out_a.str().rfind("planeform trace 1\nn 20\nalgorithm plane_formation\nseed 42\n", 0) ==
        0);
  CHECK(out_a.str().find("halt terminal\n") != std::string::npos);
  CHECK(out_a.str().find("cycle 0\n") != std::string::npos);
}

TEST_CASE("reports verify the final configuration") {
  const std::vector<Point3> pts = generate_polyhedron("dodecahedron");
  const Tolerance tol;
  const Trace good = run(pts, random_frames(pts, 1), make_algorithm("plane_formation", tol),
                         6, tol);
  const std::string good_report = format_report(good, tol);
  CHECK(good_report.find("halt: terminal") != std::string::npos);
  CHECK(good_report.find("final: coplanar=yes") != std::string::npos);
  CHECK(good_report.substr(good_report.size() - 5) == "PASS\n");

  const Algorithm drift = [](std::span<const Point3> local, std::size_t self) {
    return local[self] + Vec3{0, 0, 1};
  };
  const std::vector<Point3> tet = generate_polyhedron("tetrahedron");
  const Trace stuck = run(tet, identity_frames(tet), drift, 2, tol);
  const std::string stuck_report = format_report(stuck, tol);
  CHECK(stuck_report.find("halt: max cycles reached") != std::string::npos);
  CHECK(stuck_report.substr(stuck_report.size() - 5) == "FAIL\n");
}

TEST_SUITE_END();
