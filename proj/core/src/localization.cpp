#include "lavatube/localization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lavatube {

double normalize_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(a, two_pi);  // [-pi, pi]
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

Pose compose_pose(const Pose& parent, const Measurement& m) {
  const double beta = m.bearing + parent.phi;
  return {parent.x + m.range * std::cos(beta), parent.y + m.range * std::sin(beta),
          normalize_angle(parent.phi + m.relative_heading)};
}

Pose localize_chain(const Pose& base, std::span<const Measurement> chain) {
  Pose p = base;
  for (const Measurement& m : chain) p = compose_pose(p, m);
  return p;
}

Measurement relative_measurement(const Pose& observer, const Pose& target) {
  const double dx = target.x - observer.x;
  const double dy = target.y - observer.y;
  const double range = std::hypot(dx, dy);
  const double bearing = range > 0.0 ? normalize_angle(std::atan2(dy, dx) - observer.phi) : 0.0;
  return {range, bearing, normalize_angle(target.phi - observer.phi)};
}

Measurement perturb(const Measurement& m, double range_sigma, double bearing_sigma,
                    std::mt19937_64& rng) {
  Measurement out = m;
  if (range_sigma > 0.0) {
    out.range = std::max(0.0, m.range + std::normal_distribution<double>(0.0, range_sigma)(rng));
  }
  if (bearing_sigma > 0.0) {
    out.bearing =
        normalize_angle(m.bearing + std::normal_distribution<double>(0.0, bearing_sigma)(rng));
  }
  return out;
}

}  // namespace lavatube
