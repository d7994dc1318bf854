#include "planeform/generators.hpp"

#include <cmath>
#include <numbers>

#include "planeform/decomposition.hpp"
#include "planeform/error.hpp"

namespace planeform {
namespace {

constexpr double kPhi = 1.6180339887498948482;  // (1 + sqrt 5) / 2

std::vector<Point3> scaled_to(std::vector<Point3> pts, double circumradius) {
  double rmax = 0.0;
  for (const Point3& p : pts) rmax = std::max(rmax, norm(p));
  if (rmax <= 0.0) throw Error("degenerate generator");
  const double f = circumradius / rmax;
  for (Point3& p : pts) p = f * p;
  return pts;
}

void cyclic_perms(std::vector<Point3>& out, double x, double y, double z) {
  out.push_back({x, y, z});
  out.push_back({z, x, y});
  out.push_back({y, z, x});
}

std::vector<Point3> tetrahedron() {
  return {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
}

std::vector<Point3> octahedron() {
  return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

std::vector<Point3> cube() {
  std::vector<Point3> out;
  for (double x : {-1.0, 1.0})
    for (double y : {-1.0, 1.0})
      for (double z : {-1.0, 1.0}) out.push_back({x, y, z});
  return out;
}

std::vector<Point3> icosahedron() {
  std::vector<Point3> out;
  for (double a : {-1.0, 1.0})
    for (double b : {-kPhi, kPhi}) cyclic_perms(out, 0, a, b);
  return out;
}

std::vector<Point3> dodecahedron() {
  std::vector<Point3> out = cube();
  for (double a : {-1.0, 1.0})
    for (double b : {-kPhi, kPhi}) cyclic_perms(out, 0, a / kPhi, b);
  return out;
}

std::vector<Point3> cuboctahedron() {
  std::vector<Point3> out;
  for (double a : {-1.0, 1.0})
    for (double b : {-1.0, 1.0}) {
      out.push_back({a, b, 0});
      out.push_back({a, 0, b});
      out.push_back({0, a, b});
    }
  return out;
}

std::vector<Point3> icosidodecahedron() {
  std::vector<Point3> out;
  for (double a : {-kPhi, kPhi}) cyclic_perms(out, 0, 0, a);
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0})
      for (double sz : {-1.0, 1.0})
        cyclic_perms(out, sx / 2, sy * kPhi / 2, sz * kPhi * kPhi / 2);
  return out;
}

std::vector<Point3> truncated_tetrahedron() {
  std::vector<Point3> out;
  const double signs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (const auto& s : signs) {
    out.push_back({3 * s[0], 1 * s[1], 1 * s[2]});
    out.push_back({1 * s[0], 3 * s[1], 1 * s[2]});
    out.push_back({1 * s[0], 1 * s[1], 3 * s[2]});
  }
  return out;
}

std::vector<Point3> truncated_cube() {
  std::vector<Point3> out;
  const double xi = std::sqrt(2.0) - 1.0;
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0})
      for (double sz : {-1.0, 1.0}) {
        out.push_back({sx * xi, sy, sz});
        out.push_back({sx, sy * xi, sz});
        out.push_back({sx, sy, sz * xi});
      }
  return out;
}

std::vector<Point3> prism(int k) {
  if (k < 3) throw Error("unknown generator");
  const double edge = 2.0 * std::sin(std::numbers::pi / k);
  const double h = 1.25 * edge / 2.0;  // half height; != edge/2 so prism(4) stays D_4
  std::vector<Point3> out;
  for (int j = 0; j < k; ++j) {
    const double a = 2.0 * std::numbers::pi * j / k;
    out.push_back({std::cos(a), std::sin(a), h});
    out.push_back({std::cos(a), std::sin(a), -h});
  }
  return out;
}

std::vector<Point3> pyramid(int k) {
  if (k < 3) throw Error("unknown generator");
  std::vector<Point3> out{{0, 0, 1}};
  for (int j = 0; j < k; ++j) {
    const double a = 2.0 * std::numbers::pi * j / k;
    out.push_back({0.8 * std::cos(a), 0.8 * std::sin(a), -0.35});
  }
  return out;
}

std::vector<Point3> sphenoid(double a, double c) {
  return {{a, 0, -c}, {-a, 0, -c}, {0, a, c}, {0, -a, c}};
}

GroupKind parse_kind(const std::string& s) {
  if (s == "T") return GroupKind::Tetrahedral;
  if (s == "O") return GroupKind::Octahedral;
  if (s == "I") return GroupKind::Icosahedral;
  throw Error("unknown generator");
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

double to_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw Error("unknown generator");
    return v;
  } catch (const std::exception&) {
    throw Error("unknown generator");
  }
}

int to_int(const std::string& s) {
  const double v = to_double(s);
  const int k = static_cast<int>(v);
  if (static_cast<double>(k) != v) throw Error("unknown generator");
  return k;
}

}  // namespace

std::vector<RotationOp> canonical_group(GroupKind kind) {
  switch (kind) {
    case GroupKind::Tetrahedral: return enumerate_rotations(tetrahedron());
    case GroupKind::Octahedral: return enumerate_rotations(octahedron());
    case GroupKind::Icosahedral: return enumerate_rotations(icosahedron());
    default: throw Error("polyhedral kind required");
  }
}

std::vector<Point3> generate_polyhedron(const std::string& name, double circumradius) {
  std::string base = name;
  std::string args;
  const std::size_t open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')') throw Error("unknown generator");
    base = name.substr(0, open);
    args = name.substr(open + 1, name.size() - open - 2);
  }

  if (base == "tetrahedron") return scaled_to(tetrahedron(), circumradius);
  if (base == "octahedron") return scaled_to(octahedron(), circumradius);
  if (base == "cube") return scaled_to(cube(), circumradius);
  if (base == "icosahedron") return scaled_to(icosahedron(), circumradius);
  if (base == "dodecahedron") return scaled_to(dodecahedron(), circumradius);
  if (base == "cuboctahedron") return scaled_to(cuboctahedron(), circumradius);
  if (base == "icosidodecahedron") return scaled_to(icosidodecahedron(), circumradius);
  if (base == "truncated_tetrahedron") return scaled_to(truncated_tetrahedron(), circumradius);
  if (base == "truncated_cube") return scaled_to(truncated_cube(), circumradius);
  if (base == "prism") return scaled_to(prism(to_int(args)), circumradius);
  if (base == "pyramid") return scaled_to(pyramid(to_int(args)), circumradius);
  if (base == "sphenoid") {
    if (args.empty()) return scaled_to(sphenoid(1.0, 0.75), circumradius);
    const auto a = split_args(args);
    if (a.size() != 2) throw Error("unknown generator");
    return scaled_to(sphenoid(to_double(a[0]), to_double(a[1])), circumradius);
  }
  if (base == "orbit") {
    if (args.empty()) throw Error("unknown generator");
    const auto a = split_args(args);
    if (a.size() != 1 && a.size() != 4) throw Error("unknown generator");
    const GroupKind kind = parse_kind(a[0]);
    Point3 seed{0.9, 0.35, 0.2};
    if (a.size() == 4) seed = Point3{to_double(a[1]), to_double(a[2]), to_double(a[3])};
    if (norm(seed) <= 0.0) throw Error("unknown generator");
    seed = (circumradius / norm(seed)) * seed;
    return orbit_of(seed, canonical_group(kind));
  }
  throw Error("unknown generator");
}

std::vector<std::string> generator_names() {
  return {"tetrahedron",           "octahedron",      "cube",
          "icosahedron",           "dodecahedron",    "cuboctahedron",
          "icosidodecahedron",     "truncated_tetrahedron", "truncated_cube",
          "prism(k)",              "pyramid(k)",      "sphenoid(a,c)",
          "orbit(T|O|I[,x,y,z])"};
}

}  // namespace planeform
