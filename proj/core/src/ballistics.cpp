#include "lavatube/ballistics.hpp"

#include <cmath>

#include "lavatube/error.hpp"

namespace lavatube::ballistics {

Vec3 hop_velocity(Vec2 d, double g, double tau) {
  detail::require_positive(tau, "transfer time");
  detail::require_positive(g, "gravity");
  return {d.x / tau, d.y / tau, g * tau / 2.0};
}

HopPlan plan_hop(Vec2 d, double g, double tau) {
  const Vec3 v0 = hop_velocity(d, g, tau);
  // Symmetric parabola: vertical speed flips sign at impact.
  const Vec3 vf{v0.x, v0.y, -v0.z};
  return {d, tau, v0, vf, v0.norm(), vf.norm()};
}

double optimal_transfer_time(double distance, double g) {
  detail::require_positive(distance, "hop distance");
  detail::require_positive(g, "gravity");
  return std::sqrt(2.0 * distance / g);
}

double optimal_hop_cost(double distance, double g) {
  detail::require(distance >= 0.0, "hop distance must be non-negative");
  detail::require_positive(g, "gravity");
  return 2.0 * std::sqrt(g * distance);
}

double delta_v_budget(const FuelBudget& budget, double g0) {
  detail::require_positive(budget.isp, "isp");
  detail::require_positive(g0, "g0");
  detail::require(budget.m_prop >= 0.0 && budget.m_prop < budget.m0,
                  "propellant mass must satisfy 0 <= m_prop < m0");
  return budget.isp * g0 * std::log(budget.m0 / (budget.m0 - budget.m_prop));
}

HopBudget hop_budget(const FuelBudget& budget, double g_body, double hop_distance, double g0) {
  detail::require_positive(hop_distance, "hop distance");
  const double per_hop = optimal_hop_cost(hop_distance, g_body);
  const auto n = static_cast<std::int64_t>(std::floor(delta_v_budget(budget, g0) / per_hop));
  return {n, static_cast<double>(n) * hop_distance};
}

std::vector<Vec3> trajectory_points(Vec3 origin, Vec3 v0, double g, double tau, int n) {
  detail::require(n >= 2, "trajectory needs at least two samples");
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = i == n - 1 ? tau : tau * i / (n - 1);
    pts.push_back({origin.x + v0.x * t, origin.y + v0.y * t,
                   origin.z + v0.z * t - 0.5 * g * t * t});
  }
  return pts;
}

}  // namespace lavatube::ballistics
