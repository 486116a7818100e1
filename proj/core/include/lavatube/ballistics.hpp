#pragma once

#include <cstdint>
#include <vector>

#include "lavatube/geometry.hpp"

namespace lavatube::ballistics {

inline constexpr double kStandardGravity = 9.80665;
inline constexpr double kMoonGravity = 1.62;
inline constexpr double kMarsGravity = 3.71;

struct BodyParams {
  double g_body = kMoonGravity;
  double g0 = kStandardGravity;

  bool operator==(const BodyParams&) const = default;
};

struct FuelBudget {
  double isp = 350.0;   // s
  double m0 = 3.0;      // kg, wet mass
  double m_prop = 1.0;  // kg

  bool operator==(const FuelBudget&) const = default;
};

/// One impulsive two-burn hop over flat terrain.
struct HopPlan {
  Vec2 displacement;     // m
  double transfer_time;  // s
  Vec3 v0;               // launch velocity
  Vec3 vf;               // impact velocity
  double delta_v1;       // launch burn, |v0|
  double delta_v2;       // landing burn, |-vf|

  double total_delta_v() const { return delta_v1 + delta_v2; }
};

/// Launch velocity reaching horizontal displacement `d` after `tau` seconds.
Vec3 hop_velocity(Vec2 d, double g, double tau);

/// Launch/landing velocities and burn costs for a flat hop.
HopPlan plan_hop(Vec2 d, double g, double tau);

/// Transfer time minimizing launch plus landing delta-v: sqrt(2 d / g).
double optimal_transfer_time(double distance, double g);

/// Minimum launch-plus-landing delta-v for a flat hop: 2 sqrt(g d).
double optimal_hop_cost(double distance, double g);

/// Ideal rocket equation.
double delta_v_budget(const FuelBudget& budget, double g0 = kStandardGravity);

struct HopBudget {
  std::int64_t n_hops = 0;
  double total_distance = 0.0;  // m
};

/// Number of whole optimal hops of `hop_distance` the budget affords.
HopBudget hop_budget(const FuelBudget& budget, double g_body, double hop_distance,
                     double g0 = kStandardGravity);

/// `n` samples of the ballistic arc for t evenly spaced in [0, tau].
std::vector<Vec3> trajectory_points(Vec3 origin, Vec3 v0, double g, double tau, int n);

}  // namespace lavatube::ballistics
