#pragma once

// Internal helpers shared by the symmetry / decomposition / formation
// translation units. Not installed.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "planeform/vec.hpp"

namespace planeform::detail {

// Tolerant point-membership queries over a fixed set, O(log n + window).
class PointIndex {
 public:
  PointIndex() = default;

  PointIndex(std::span<const Point3> pts, double eps) : pts_(pts.begin(), pts.end()), eps_(eps) {
    order_.resize(pts_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return pts_[a].x < pts_[b].x;
    });
    xs_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) xs_[i] = pts_[order_[i]].x;
  }

  double eps() const { return eps_; }

  // Index (into the original order) of a point within eps of q, if any.
  std::optional<std::size_t> find(const Point3& q) const {
    auto lo = std::lower_bound(xs_.begin(), xs_.end(), q.x - eps_);
    for (auto it = lo; it != xs_.end() && *it <= q.x + eps_; ++it) {
      const std::size_t idx = order_[static_cast<std::size_t>(it - xs_.begin())];
      if (distance(pts_[idx], q) <= eps_) return idx;
    }
    return std::nullopt;
  }

  bool contains(const Point3& q) const { return find(q).has_value(); }

 private:
  std::vector<Point3> pts_;
  std::vector<std::size_t> order_;
  std::vector<double> xs_;
  double eps_ = 0.0;
};

// Sorted multiset of distances from each point to all the others; invariant
// under any isometry permuting the set, so mismatching fingerprints prune
// rotation candidates cheaply.
inline std::vector<std::vector<double>> distance_fingerprints(std::span<const Point3> pts) {
  const std::size_t n = pts.size();
  std::vector<std::vector<double>> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    f[i].reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) f[i].push_back(distance(pts[i], pts[j]));
    std::sort(f[i].begin(), f[i].end());
  }
  return f;
}

inline bool fingerprints_match(const std::vector<double>& a, const std::vector<double>& b,
                               double eps) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > eps) return false;
  return true;
}

}  // namespace planeform::detail
