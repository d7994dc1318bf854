#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "planeform/simulation.hpp"
#include "planeform/symmetry.hpp"
#include "planeform/vec.hpp"

namespace planeform {

// Frames that make every robot of a G-orbit see the same observation: each
// orbit gets one random base frame, and the robot reached by group element g
// wears that frame rotated by g. Under any deterministic algorithm the
// configuration then stays G-symmetric forever.
struct AdversaryPlan {
  GroupKind target = GroupKind::Tetrahedral;
  std::vector<RotationOp> embedding;      // the |G| rotations acting on P
  std::vector<std::size_t> assignment;    // per robot: index into embedding
  std::vector<std::size_t> orbit_of;      // per robot: orbit id
  std::vector<Frame> frames;
};

// The polyhedral group an adversary simulates against an unsolvable
// configuration: T, O or I by minimum orbit size 12, 24 or 60. Throws
// "no adversary exists" on solvable input.
GroupKind adversary_group(std::span<const Point3> points, const Tolerance& tol = {});

// Builds the plan for a chosen target group. Requires the target to embed in
// the rotation group of P ("target group does not embed") and every G-orbit
// to have full size |G| ("folding > 1, construction inapplicable").
AdversaryPlan build_adversary(std::span<const Point3> points, GroupKind target,
                              std::uint64_t seed, const Tolerance& tol = {});

std::vector<Frame> build_symmetric_frames(std::span<const Point3> points, GroupKind target,
                                          std::uint64_t seed, const Tolerance& tol = {});

}  // namespace planeform
