#include "planeform/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "point_index.hpp"

namespace planeform {
namespace {

constexpr int kMaxOrder = 60;
// M^k == I is decided at this threshold: consecutive candidate orders differ
// in angle by at least 2 pi / 60^2 ~ 1.7e-3, while accumulated rounding over
// sixty 3x3 products stays below 1e-12.
constexpr double kOrderEps = 1e-5;
// Rotation matrices have O(1) entries; two distinct elements of a group of
// order <= 60 differ by at least ~1e-2 in some entry.
constexpr double kMatrixEps = 1e-7;

bool matrix_in(const std::vector<RotationOp>& set, const Mat3& m) {
  for (const RotationOp& r : set)
    if (max_abs_diff(r.matrix, m) <= kMatrixEps) return true;
  return false;
}

bool lex_less_matrix(const Mat3& a, const Mat3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (a.m[i][j] != b.m[i][j]) return a.m[i][j] < b.m[i][j];
    }
  return false;
}

}  // namespace

std::optional<RotationOp> make_rotation_op(const Mat3& m, const Tolerance& tol) {
  const double ortho_eps = std::max(1e2 * tol.rel, tol.abs);
  if (max_abs_diff(m.transposed() * m, Mat3::identity()) > ortho_eps) return std::nullopt;
  if (std::abs(m.det() - 1.0) > ortho_eps) return std::nullopt;

  RotationOp op;
  op.matrix = m;
  if (max_abs_diff(m, Mat3::identity()) <= kOrderEps) {
    return op;  // identity: order 1, zero axis
  }

  int order = 0;
  Mat3 power = m;
  for (int k = 1; k <= kMaxOrder; ++k) {
    if (k > 1) power = power * m;
    if (max_abs_diff(power, Mat3::identity()) <= kOrderEps) {
      order = k;
      break;
    }
  }
  if (order == 0) return std::nullopt;  // angle does not snap to 2 pi j / k, k <= 60
  op.order = order;

  const double cos_angle = std::clamp((m.trace() - 1.0) * 0.5, -1.0, 1.0);
  double angle = std::acos(cos_angle);
  // Snap to the exact multiple of 2 pi / order.
  const double step = 2.0 * std::numbers::pi / order;
  angle = step * std::round(angle / step);
  op.angle = std::clamp(angle, 0.0, std::numbers::pi);

  Vec3 axis;
  if (std::numbers::pi - op.angle > 1e-3) {
    // sin(angle) bounded away from zero: read the axis off the skew part.
    axis = {m.m[2][1] - m.m[1][2], m.m[0][2] - m.m[2][0], m.m[1][0] - m.m[0][1]};
  } else {
    // Half-turn: M + I = 2 u u^T; take the largest column.
    Mat3 s = m;
    for (int i = 0; i < 3; ++i) s.m[i][i] += 1.0;
    int best = 0;
    double best_norm = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double n2 = norm2(s.column(j));
      if (n2 > best_norm) {
        best_norm = n2;
        best = j;
      }
    }
    axis = s.column(best);
  }
  op.axis = canonical_axis(axis);
  return op;
}

std::vector<RotationOp> enumerate_rotations(std::span<const Point3> points,
                                            const Tolerance& tol) {
  if (points.size() < 2) throw Error("fewer than two points");
  if (collinear(points, tol)) throw Error("infinite rotation group (collinear)");

  const Ball bound = smallest_enclosing_ball(points);
  const double eps = tol.eps(bound.radius);
  const std::size_t n = points.size();

  // Work in coordinates centered on b(P).
  std::vector<Point3> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = points[i] - bound.center;

  detail::PointIndex index(q, eps);

  // Radius shells.
  std::vector<double> radius(n);
  std::vector<std::size_t> by_radius(n);
  for (std::size_t i = 0; i < n; ++i) {
    radius[i] = norm(q[i]);
    by_radius[i] = i;
  }
  std::sort(by_radius.begin(), by_radius.end(),
            [&](std::size_t a, std::size_t b) { return radius[a] < radius[b]; });
  std::vector<std::vector<std::size_t>> shells;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0 || radius[by_radius[k]] - radius[by_radius[k - 1]] > eps) shells.emplace_back();
    shells.back().push_back(by_radius[k]);
  }

  const auto fingerprints = detail::distance_fingerprints(q);
  const double fp_eps = 2.0 * eps;

  // Base point a: lexicographically smallest member of the smallest usable
  // shell (skipping a point sitting on the center, which every rotation
  // fixes anyway).
  auto shell_usable = [&](const std::vector<std::size_t>& s) {
    return radius[s.front()] > eps;
  };
  // Prefer fewer candidates; shells come radius-ascending, so ties keep the
  // inner shell.
  const std::vector<std::size_t>* base_shell = nullptr;
  for (const auto& s : shells) {
    if (!shell_usable(s)) continue;
    if (!base_shell || s.size() < base_shell->size()) base_shell = &s;
  }
  if (!base_shell) throw Error("infinite rotation group (collinear)");
  std::size_t ia = base_shell->front();
  for (std::size_t i : *base_shell)
    if (lex_less(q[i], q[ia])) ia = i;

  // Second point b: non-collinear with a and the center, from the smallest
  // shell that offers one.
  std::size_t ib = n;  // invalid
  {
    std::vector<const std::vector<std::size_t>*> order;
    for (const auto& s : shells)
      if (shell_usable(s)) order.push_back(&s);
    std::sort(order.begin(), order.end(),
              [&](const std::vector<std::size_t>* x, const std::vector<std::size_t>* y) {
                if (x->size() != y->size()) return x->size() < y->size();
                return radius[x->front()] < radius[y->front()];
              });
    for (const auto* s : order) {
      for (std::size_t i : *s) {
        if (i == ia) continue;
        if (norm(cross(q[ia], q[i])) > eps * bound.radius) {
          if (ib == n || lex_less(q[i], q[ib])) ib = i;
        }
      }
      if (ib != n) break;
    }
  }
  if (ib == n) throw Error("infinite rotation group (collinear)");

  const double d_ab = distance(q[ia], q[ib]);
  const std::vector<std::size_t>* b_shell = nullptr;
  for (const auto& s : shells) {
    if (std::abs(radius[s.front()] - radius[ib]) <= eps) {
      b_shell = &s;
      break;
    }
  }

  std::vector<RotationOp> group;
  auto verify_and_add = [&](const Mat3& m) {
    if (matrix_in(group, m)) return;
    for (std::size_t i = 0; i < n; ++i) {
      if (!index.contains(m * q[i])) return;
    }
    if (auto op = make_rotation_op(m, tol)) group.push_back(*op);
  };

  verify_and_add(Mat3::identity());
  for (std::size_t a2 : *base_shell) {
    if (!detail::fingerprints_match(fingerprints[ia], fingerprints[a2], fp_eps)) continue;
    for (std::size_t b2 : *b_shell) {
      if (b2 == a2) continue;
      if (std::abs(distance(q[a2], q[b2]) - d_ab) > 2.0 * eps) continue;
      if (!detail::fingerprints_match(fingerprints[ib], fingerprints[b2], fp_eps)) continue;
      std::optional<Mat3> m;
      try {
        m = rotation_from_vector_pairs(q[ia], q[ib], q[a2], q[b2], tol);
      } catch (const Error&) {
        continue;  // degenerate image pair
      }
      if (m) verify_and_add(*m);
    }
  }

  std::sort(group.begin(), group.end(), [](const RotationOp& x, const RotationOp& y) {
    return lex_less_matrix(x.matrix, y.matrix);
  });
  return group;
}

namespace {

struct AxisBucket {
  Vec3 dir;
  int max_order = 2;
  int members = 0;
};

std::vector<AxisBucket> collect_axes(std::span<const RotationOp> rots) {
  std::vector<AxisBucket> axes;
  for (const RotationOp& r : rots) {
    if (r.order == 1) continue;
    bool placed = false;
    for (AxisBucket& a : axes) {
      if (norm(a.dir - r.axis) <= 1e-6) {
        a.max_order = std::max(a.max_order, r.order);
        a.members += 1;
        placed = true;
        break;
      }
    }
    if (!placed) axes.push_back({r.axis, r.order, 1});
  }
  return axes;
}

}  // namespace

const char* to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Cyclic: return "Cyclic";
    case GroupKind::Dihedral: return "Dihedral";
    case GroupKind::Tetrahedral: return "Tetrahedral";
    case GroupKind::Octahedral: return "Octahedral";
    case GroupKind::Icosahedral: return "Icosahedral";
    case GroupKind::Collinear: return "Collinear";
  }
  return "?";
}

std::string to_string(const GroupClass& group) {
  switch (group.kind) {
    case GroupKind::Cyclic: return "C_" + std::to_string(group.degree);
    case GroupKind::Dihedral: return "D_" + std::to_string(group.degree);
    case GroupKind::Tetrahedral: return "T";
    case GroupKind::Octahedral: return "O";
    case GroupKind::Icosahedral: return "I";
    case GroupKind::Collinear: return "collinear";
  }
  return "?";
}

GroupClass classify_rotation_group(std::span<const RotationOp> rotations,
                                   std::span<const Point3> points, const Tolerance& tol,
                                   bool verify_closure) {
  if (rotations.empty()) throw Error("empty rotation set");
  std::vector<RotationOp> rots(rotations.begin(), rotations.end());

  bool has_identity = false;
  for (const RotationOp& r : rots)
    if (r.order == 1) has_identity = true;
  if (!has_identity) throw Error("rotation set lacks identity");

  if (verify_closure) {
    for (const RotationOp& g : rots)
      for (const RotationOp& h : rots) {
        if (!matrix_in(rots, g.matrix * h.matrix))
          throw Error("rotation set not closed under composition");
      }
  }

  GroupClass out;
  const int n = static_cast<int>(rots.size());
  out.order = n;

  if (n == 1) {
    out.kind = GroupKind::Cyclic;
    out.degree = 1;
    return out;
  }

  const std::vector<AxisBucket> axes = collect_axes(rots);
  out.axes.reserve(axes.size());
  for (const AxisBucket& a : axes) out.axes.push_back({a.dir, a.max_order});

  // Per axis, the rotations about it form a cyclic group: fold - 1 elements.
  for (const AxisBucket& a : axes) {
    if (a.members != a.max_order - 1) throw Error("unclassifiable rotation set");
  }

  if (axes.size() == 1) {
    if (axes[0].max_order != n) throw Error("unclassifiable rotation set");
    out.kind = GroupKind::Cyclic;
    out.degree = n;
    out.principal = axes[0].dir;
    return out;
  }

  std::map<int, int> fold_count;
  for (const AxisBucket& a : axes) fold_count[a.max_order] += 1;
  auto folds = [&](int fold) {
    auto it = fold_count.find(fold);
    return it == fold_count.end() ? 0 : it->second;
  };

  // Dihedral: one l-fold principal plus l perpendicular 2-fold axes (for
  // l = 2 the principal is itself 2-fold: three mutually perpendicular axes).
  const int half = n / 2;
  if (n % 2 == 0 && half >= 2) {
    if (half == 2) {
      if (axes.size() == 3 && folds(2) == 3) {
        bool perp = true;
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j)
            if (std::abs(dot(axes[i].dir, axes[j].dir)) > 1e-6) perp = false;
        if (perp) {
          out.kind = GroupKind::Dihedral;
          out.degree = 2;
          if (!points.empty()) {
            out.principal = principal_axis_d2(
                points, {axes[0].dir, axes[1].dir, axes[2].dir}, tol);
          }
          return out;
        }
      }
    } else if (folds(half) == 1 && folds(2) == half &&
               static_cast<int>(axes.size()) == half + 1) {
      const AxisBucket* principal = nullptr;
      for (const AxisBucket& a : axes)
        if (a.max_order == half) principal = &a;
      bool ok = principal != nullptr;
      if (ok) {
        for (const AxisBucket& a : axes) {
          if (&a == principal) continue;
          if (a.max_order != 2 || std::abs(dot(a.dir, principal->dir)) > 1e-6) ok = false;
        }
      }
      if (ok) {
        out.kind = GroupKind::Dihedral;
        out.degree = half;
        out.principal = principal->dir;
        return out;
      }
    }
  }

  auto signature_is = [&](std::initializer_list<std::pair<int, int>> sig) {
    if (fold_count.size() != sig.size()) return false;
    for (const auto& [fold, count] : sig) {
      auto it = fold_count.find(fold);
      if (it == fold_count.end() || it->second != count) return false;
    }
    return true;
  };

  if (n == 12 && signature_is({{2, 3}, {3, 4}})) {
    out.kind = GroupKind::Tetrahedral;
    out.degree = 0;
    return out;
  }
  if (n == 24 && signature_is({{2, 6}, {3, 4}, {4, 3}})) {
    out.kind = GroupKind::Octahedral;
    out.degree = 0;
    return out;
  }
  if (n == 60 && signature_is({{2, 15}, {3, 10}, {5, 6}})) {
    out.kind = GroupKind::Icosahedral;
    out.degree = 0;
    return out;
  }
  throw Error("unclassifiable rotation set");
}

Vec3 principal_axis_d2(std::span<const Point3> points, const std::array<Vec3, 3>& axes,
                       const Tolerance& tol) {
  if (points.empty()) throw Error("empty point set");
  const Ball bound = smallest_enclosing_ball(points);
  const double eps = tol.eps(bound.radius);

  using Signature = std::vector<std::pair<double, double>>;
  std::array<Signature, 3> sig;
  for (int a = 0; a < 3; ++a) {
    const Vec3 u = normalized(axes[a]);
    sig[a].reserve(points.size());
    for (const Point3& p : points) {
      const Vec3 d = p - bound.center;
      const double axial = dot(d, u);
      sig[a].emplace_back(norm(d - axial * u), std::abs(axial));
    }
    std::sort(sig[a].begin(), sig[a].end());
  }

  auto equal = [&](const Signature& x, const Signature& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (std::abs(x[i].first - y[i].first) > eps) return false;
      if (std::abs(x[i].second - y[i].second) > eps) return false;
    }
    return true;
  };
  auto less = [&](const Signature& x, const Signature& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (std::abs(x[i].first - y[i].first) > eps) return x[i].first < y[i].first;
      if (std::abs(x[i].second - y[i].second) > eps) return x[i].second < y[i].second;
    }
    return false;
  };

  const bool eq01 = equal(sig[0], sig[1]);
  const bool eq02 = equal(sig[0], sig[2]);
  const bool eq12 = equal(sig[1], sig[2]);
  if (eq01 && eq02 && eq12) throw Error("supergroup of D2 present");
  int pick;
  if (eq01) pick = 2;
  else if (eq02) pick = 1;
  else if (eq12) pick = 0;
  else {
    pick = 0;
    if (less(sig[1], sig[pick])) pick = 1;
    if (less(sig[2], sig[pick])) pick = 2;
  }
  return canonical_axis(axes[static_cast<std::size_t>(pick)]);
}

std::optional<std::vector<RotationOp>> find_subgroup(std::span<const RotationOp> rotations,
                                                     GroupKind target, const Tolerance&) {
  int target_order;
  std::map<int, int> target_profile;  // element order -> count, identity included
  switch (target) {
    case GroupKind::Tetrahedral:
      target_order = 12;
      target_profile = {{1, 1}, {2, 3}, {3, 8}};
      break;
    case GroupKind::Octahedral:
      target_order = 24;
      target_profile = {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
      break;
    case GroupKind::Icosahedral:
      target_order = 60;
      target_profile = {{1, 1}, {2, 15}, {3, 20}, {5, 24}};
      break;
    default:
      throw Error("subgroup target must be T, O or I");
  }

  const int n = static_cast<int>(rotations.size());
  if (n < target_order || n % target_order != 0) return std::nullopt;

  // Canonical element order, then an index-based multiplication table.
  std::vector<RotationOp> elems(rotations.begin(), rotations.end());
  std::sort(elems.begin(), elems.end(), [](const RotationOp& x, const RotationOp& y) {
    return lex_less_matrix(x.matrix, y.matrix);
  });
  auto index_of = [&](const Mat3& m) -> int {
    for (int i = 0; i < n; ++i)
      if (max_abs_diff(elems[static_cast<std::size_t>(i)].matrix, m) <= kMatrixEps) return i;
    return -1;
  };
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int k = index_of(elems[static_cast<std::size_t>(i)].matrix *
                             elems[static_cast<std::size_t>(j)].matrix);
      if (k < 0) throw Error("rotation set not closed under composition");
      mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
    }

  auto profile_matches = [&](const std::vector<int>& members) {
    std::map<int, int> profile;
    for (int i : members) profile[elems[static_cast<std::size_t>(i)].order] += 1;
    return profile == target_profile;
  };

  // T, O and I are all 2-generated; scan ordered generator pairs.
  for (int g = 0; g < n; ++g) {
    for (int h = g; h < n; ++h) {
      std::vector<char> in_set(static_cast<std::size_t>(n), 0);
      std::vector<int> members;
      std::vector<int> frontier{g, h};
      for (int s : frontier)
        if (!in_set[static_cast<std::size_t>(s)]) {
          in_set[static_cast<std::size_t>(s)] = 1;
          members.push_back(s);
        }
      bool overflow = false;
      for (std::size_t head = 0; head < members.size() && !overflow; ++head) {
        for (std::size_t j = 0; j < members.size(); ++j) {
          const int p = mul[static_cast<std::size_t>(members[head])]
                           [static_cast<std::size_t>(members[j])];
          if (!in_set[static_cast<std::size_t>(p)]) {
            in_set[static_cast<std::size_t>(p)] = 1;
            members.push_back(p);
            if (static_cast<int>(members.size()) > target_order) {
              overflow = true;
              break;
            }
          }
          const int p2 = mul[static_cast<std::size_t>(members[j])]
                            [static_cast<std::size_t>(members[head])];
          if (!in_set[static_cast<std::size_t>(p2)]) {
            in_set[static_cast<std::size_t>(p2)] = 1;
            members.push_back(p2);
            if (static_cast<int>(members.size()) > target_order) {
              overflow = true;
              break;
            }
          }
        }
      }
      if (overflow || static_cast<int>(members.size()) != target_order) continue;
      if (!profile_matches(members)) continue;
      std::sort(members.begin(), members.end());
      std::vector<RotationOp> out;
      out.reserve(members.size());
      for (int i : members) out.push_back(elems[static_cast<std::size_t>(i)]);
      return out;
    }
  }
  return std::nullopt;
}

bool preserves_configuration(std::span<const Point3> points, const Mat3& rotation,
                             const Point3& center, const Tolerance& tol) {
  double radius = 0.0;
  for (const Point3& p : points) radius = std::max(radius, distance(p, center));
  const double eps = tol.eps(radius);

  std::vector<char> used(points.size(), 0);
  for (const Point3& p : points) {
    const Point3 image = center + rotation * (p - center);
    bool matched = false;
    for (std::size_t j = 0; j < points.size() && !matched; ++j) {
      if (!used[j] && distance(points[j], image) <= eps) {
        used[j] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

SymmetryInfo analyze_symmetry(std::span<const Point3> points, const Tolerance& tol) {
  SymmetryInfo info;
  info.bounding = smallest_enclosing_ball(points);
  if (points.size() < 2) {
    info.rotations.push_back(RotationOp{});
    info.group.kind = GroupKind::Cyclic;
    info.group.degree = 1;
    info.group.order = 1;
    return info;
  }
  if (collinear(points, tol)) {
    info.group.kind = GroupKind::Collinear;
    info.group.degree = 0;
    info.group.order = 0;
    info.group.principal = fit_line(points).direction;
    return info;
  }
  info.rotations = enumerate_rotations(points, tol);
  info.group = classify_rotation_group(info.rotations, points, tol, /*verify_closure=*/false);
  return info;
}

}  // namespace planeform
