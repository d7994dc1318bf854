#include "planeform/scenario.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "planeform/adversary.hpp"
#include "planeform/error.hpp"
#include "planeform/formation.hpp"
#include "planeform/generators.hpp"

namespace planeform {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error("scenario parse error: line " + std::to_string(line) + ": " + what);
}

// Reads trimmed content lines, skipping blanks and '#' comments.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      const std::string t = trim(raw);
      if (t.empty() || t[0] == '#') continue;
      out = t;
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

double read_double(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) parse_fail(line, "bad number '" + s + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    parse_fail(line, "bad number '" + s + "'");
  }
}

std::uint64_t read_u64(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used);
    if (used != s.size()) parse_fail(line, "bad integer '" + s + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    parse_fail(line, "bad integer '" + s + "'");
  }
}

Point3 read_point(const std::string& s, std::size_t line) {
  std::istringstream iss(s);
  Point3 p;
  std::string extra;
  if (!(iss >> p.x >> p.y >> p.z)) parse_fail(line, "expected 'x y z'");
  if (iss >> extra) parse_fail(line, "trailing content '" + extra + "'");
  return p;
}

}  // namespace

Scenario parse_scenario(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) parse_fail(reader.line(), "empty input");
  if (line != "planeform scenario 1")
    parse_fail(reader.line(), "expected header 'planeform scenario 1'");

  Scenario s;
  bool have_source = false;
  while (reader.next(line)) {
    std::istringstream iss(line);
    std::string key;
    iss >> key;
    std::string rest = trim(line.substr(key.size()));

    if (key == "algorithm") {
      s.algorithm = rest;
    } else if (key == "frames") {
      if (rest == "identity") s.frames = FrameSpec::Identity;
      else if (rest == "random") s.frames = FrameSpec::Random;
      else if (rest == "adversarial") s.frames = FrameSpec::Adversarial;
      else parse_fail(reader.line(), "unknown frame spec '" + rest + "'");
    } else if (key == "seed") {
      s.seed = read_u64(rest, reader.line());
    } else if (key == "cycles") {
      s.max_cycles = static_cast<std::size_t>(read_u64(rest, reader.line()));
    } else if (key == "tol") {
      s.tol_rel = read_double(rest, reader.line());
    } else if (key == "generator") {
      if (have_source) parse_fail(reader.line(), "duplicate point source");
      std::istringstream gss(rest);
      std::string name, radius, extra;
      gss >> name >> radius;
      if (name.empty()) parse_fail(reader.line(), "expected generator name");
      if (gss >> extra) parse_fail(reader.line(), "trailing content '" + extra + "'");
      s.generator = name;
      s.radius = radius.empty() ? 1.0 : read_double(radius, reader.line());
      have_source = true;
    } else if (key == "points") {
      if (have_source) parse_fail(reader.line(), "duplicate point source");
      const std::uint64_t n = read_u64(rest, reader.line());
      for (std::uint64_t i = 0; i < n; ++i) {
        if (!reader.next(line)) parse_fail(reader.line(), "expected a point row");
        s.points.push_back(read_point(line, reader.line()));
      }
      have_source = true;
    } else {
      parse_fail(reader.line(), "unknown field '" + key + "'");
    }
  }
  if (!have_source) parse_fail(reader.line(), "scenario has no points or generator");
  return s;
}

void write_scenario(std::ostream& out, const Scenario& s) {
  out << "planeform scenario 1\n";
  out << "algorithm " << s.algorithm << "\n";
  out << "frames ";
  switch (s.frames) {
    case FrameSpec::Identity: out << "identity"; break;
    case FrameSpec::Random: out << "random"; break;
    case FrameSpec::Adversarial: out << "adversarial"; break;
  }
  out << "\n";
  out << "seed " << s.seed << "\n";
  out << "cycles " << s.max_cycles << "\n";
  out << "tol " << fmt(s.tol_rel) << "\n";
  if (!s.generator.empty()) {
    out << "generator " << s.generator << " " << fmt(s.radius) << "\n";
  } else {
    out << "points " << s.points.size() << "\n";
    for (const Point3& p : s.points)
      out << fmt(p.x) << " " << fmt(p.y) << " " << fmt(p.z) << "\n";
  }
}

std::string normalize_scenario(const std::string& text) {
  std::istringstream in(text);
  const Scenario s = parse_scenario(in);
  std::ostringstream out;
  write_scenario(out, s);
  return out.str();
}

std::vector<Point3> parse_points(std::istream& in) {
  LineReader reader(in);
  std::vector<Point3> out;
  std::string line;
  while (reader.next(line)) out.push_back(read_point(line, reader.line()));
  return out;
}

void write_points(std::ostream& out, std::span<const Point3> points) {
  for (const Point3& p : points)
    out << fmt(p.x) << " " << fmt(p.y) << " " << fmt(p.z) << "\n";
}

std::vector<Point3> scenario_points(const Scenario& s) {
  std::vector<Point3> pts =
      s.generator.empty() ? s.points : generate_polyhedron(s.generator, s.radius);
  if (pts.empty()) throw Error("scenario has no points or generator");
  if (!all_distinct(pts, s.tolerance())) throw Error("point multiplicity");
  return pts;
}

std::vector<Frame> scenario_frames(const Scenario& s, std::span<const Point3> points) {
  switch (s.frames) {
    case FrameSpec::Identity: return identity_frames(points);
    case FrameSpec::Random: return random_frames(points, s.seed);
    case FrameSpec::Adversarial:
      return build_symmetric_frames(points, adversary_group(points, s.tolerance()), s.seed,
                                    s.tolerance());
  }
  throw Error("unknown frame spec");
}

Algorithm make_algorithm(const std::string& name, const Tolerance& tol, bool guard_unsolvable) {
  if (name == "plane_formation") {
    return [tol, guard_unsolvable](std::span<const Point3> obs, std::size_t self) {
      return plane_formation_step(obs, self, tol, guard_unsolvable);
    };
  }
  if (name == "go_to_midpoint") {
    return [tol](std::span<const Point3> obs, std::size_t self) {
      if (!is_regular_polyhedron(obs, tol)) return obs[self];
      return go_to_midpoint(obs, self, tol);
    };
  }
  throw Error("unknown algorithm '" + name + "'");
}

void write_trace(std::ostream& out, const Trace& trace, const std::string& algorithm,
                 std::uint64_t seed) {
  out << "planeform trace 1\n";
  out << "n " << (trace.entries.empty() ? 0 : trace.entries.front().configuration.size())
      << "\n";
  out << "algorithm " << algorithm << "\n";
  out << "seed " << seed << "\n";
  for (const TraceEntry& e : trace.entries) {
    out << "cycle " << e.cycle << "\n";
    for (std::size_t i = 0; i < e.configuration.size(); ++i) {
      const Point3& p = e.configuration[i];
      out << i << " " << fmt(p.x) << " " << fmt(p.y) << " " << fmt(p.z) << "\n";
    }
    out << "group " << e.group << "\n";
    if (e.conditions) {
      out << "conditions " << e.conditions->t1 << " " << e.conditions->t2 << " "
          << e.conditions->t3 << "\n";
    } else {
      out << "conditions unavailable\n";
    }
  }
  switch (trace.halt) {
    case HaltReason::Terminal: out << "halt terminal\n"; break;
    case HaltReason::MaxCycles: out << "halt max_cycles\n"; break;
    case HaltReason::Error: out << "halt error " << trace.error << "\n"; break;
  }
}

std::string format_report(const Trace& trace, const Tolerance& tol) {
  std::ostringstream out;
  for (const TraceEntry& e : trace.entries) {
    out << "cycle " << e.cycle << ": group " << e.group;
    if (e.conditions) {
      out << ", T1=" << e.conditions->t1 << " T2=" << e.conditions->t2
          << " T3=" << e.conditions->t3;
    }
    if (e.multiplicity) out << ", multiplicity";
    out << "\n";
  }
  switch (trace.halt) {
    case HaltReason::Terminal: out << "halt: terminal\n"; break;
    case HaltReason::MaxCycles: out << "halt: max cycles reached\n"; break;
    case HaltReason::Error: out << "halt: error: " << trace.error << "\n"; break;
  }
  if (!trace.entries.empty()) {
    const TerminalReport r = verify_terminal(trace.entries.back().configuration, tol);
    out << "final: coplanar=" << (r.coplanar ? "yes" : "no")
        << " deviation=" << fmt(r.max_deviation)
        << " (radius " << fmt(r.radius) << ")"
        << " distinct=" << (r.distinct ? "yes" : "no")
        << " min_gap=" << fmt(r.min_gap)
        << " collinear=" << (r.collinear ? "yes" : "no") << "\n";
    const bool pass = trace.terminal() && r.coplanar && r.distinct;
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return out.str();
}

}  // namespace planeform
