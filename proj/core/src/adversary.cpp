#include "planeform/adversary.hpp"

#include <random>

#include "planeform/error.hpp"
#include "planeform/solvability.hpp"
#include "point_index.hpp"

namespace planeform {

GroupKind adversary_group(std::span<const Point3> points, const Tolerance& tol) {
  const Verdict v = check_solvable(points, tol);
  if (v.solvable) throw Error("no adversary exists");
  return *v.witness_group;
}

AdversaryPlan build_adversary(std::span<const Point3> points, GroupKind target,
                              std::uint64_t seed, const Tolerance& tol) {
  const SymmetryInfo info = analyze_symmetry(points, tol);
  const auto embedding = find_subgroup(info.rotations, target, tol);
  if (!embedding) throw Error("target group does not embed");

  const std::size_t n = points.size();
  const double eps = tol.eps(info.bounding.radius);
  std::vector<Vec3> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = points[i] - info.bounding.center;
  detail::PointIndex index(q, eps);

  AdversaryPlan plan;
  plan.target = target;
  plan.embedding = *embedding;
  plan.assignment.assign(n, SIZE_MAX);
  plan.orbit_of.assign(n, SIZE_MAX);
  plan.frames.resize(n);

  std::mt19937_64 rng(seed);
  std::size_t orbit_count = 0;
  for (std::size_t base = 0; base < n; ++base) {
    if (plan.assignment[base] != SIZE_MAX) continue;
    const Mat3 base_rotation = random_rotation(rng);
    const double scale = random_scale(rng);
    for (std::size_t e = 0; e < plan.embedding.size(); ++e) {
      const auto hit = index.find(plan.embedding[e].matrix * q[base]);
      if (!hit) throw Error("tolerance failure in orbit structure");
      if (plan.assignment[*hit] != SIZE_MAX)
        throw Error("folding > 1, construction inapplicable");
      plan.assignment[*hit] = e;
      plan.orbit_of[*hit] = orbit_count;
      plan.frames[*hit] =
          Frame{plan.embedding[e].matrix * base_rotation, scale, points[*hit]};
    }
    ++orbit_count;
  }
  return plan;
}

std::vector<Frame> build_symmetric_frames(std::span<const Point3> points, GroupKind target,
                                          std::uint64_t seed, const Tolerance& tol) {
  return build_adversary(points, target, seed, tol).frames;
}

}  // namespace planeform
