#pragma once

#include <random>
#include <span>

#include "lavatube/geometry.hpp"

namespace lavatube {

/// Planar pose in the global frame anchored at the in-tube base robot.
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double phi = 0.0;  // heading, normalized to (-pi, pi]

  Vec2 position() const { return {x, y}; }
  bool operator==(const Pose&) const = default;
};

/// Range/bearing of a target robot seen from an observer, plus the target's
/// heading relative to the observer's heading.
struct Measurement {
  double range = 0.0;
  double bearing = 0.0;             // in the observer's local frame
  double relative_heading = 0.0;

  bool operator==(const Measurement&) const = default;
};

/// Wraps an angle into (-pi, pi].
double normalize_angle(double a);

Pose compose_pose(const Pose& parent, const Measurement& m);

/// Left fold of compose_pose over `chain`, starting at `base`.
Pose localize_chain(const Pose& base, std::span<const Measurement> chain);

/// Noise-free simulated sensor: the measurement m with compose_pose(observer, m) == target.
Measurement relative_measurement(const Pose& observer, const Pose& target);

/// Zero-mean Gaussian perturbation of range and bearing. Off by default in
/// the engine; provided for robustness experiments.
Measurement perturb(const Measurement& m, double range_sigma, double bearing_sigma,
                    std::mt19937_64& rng);

}  // namespace lavatube
