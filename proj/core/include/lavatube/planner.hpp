#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "lavatube/geometry.hpp"
#include "lavatube/rng.hpp"
#include "lavatube/world.hpp"

namespace lavatube {

/// CASE_I keeps every robot linked to the base; CASE_II keeps only the
/// explorer swarm internally linked.
enum class ExplorationMode { CaseI, CaseII };

enum class RobotSelection { RoundRobin, Random };

struct PlannerParams {
  double vision_radius = 2.0;
  double comm_range = 5.0;
  double hop_range = 7.0;
  ExplorationMode mode = ExplorationMode::CaseI;
  int max_point_attempts = 20;
  int max_robot_attempts = 16;
  int distance_samples = 50;
  RobotSelection selection = RobotSelection::RoundRobin;
  Adjacency frontier_adjacency = Adjacency::Four;

  bool operator==(const PlannerParams&) const = default;
};

void validate(const PlannerParams& p);

/// Read-only view of the swarm the planner reasons about.
struct SwarmView {
  const Environment& env;
  std::span<const Vec2> explorers;
  Vec2 base;
};

struct HopDecision {
  std::size_t robot = 0;  // index into SwarmView::explorers
  Vec2 direction;
  Vec2 target;
  double distance = 0.0;
};

/// Unit vector from the robot toward the selected frontier point.
Vec2 hop_direction(Vec2 point, Vec2 robot);

/// True iff the straight route avoids every obstacle revealed so far.
bool verify_direction(Vec2 robot, Vec2 target, const Environment& env);

/// True iff every node reaches `anchor` in the disk graph of radius comm_range.
bool comm_connected(std::span<const Vec2> positions, double comm_range, std::size_t anchor);

/// Connectivity rule for the current mode with `robot` moved to `landing`.
bool swarm_connected_after(const SwarmView& view, std::size_t robot, Vec2 landing,
                           const PlannerParams& params);

/// Largest of `distance_samples` evenly spaced distances in
/// (0, min(hop_range, reach)] whose landing point is explored free space,
/// whose route is safe and which keeps the mode's connectivity rule.
std::optional<double> compute_hop_distance(const SwarmView& view, std::size_t robot,
                                           Vec2 direction, double reach,
                                           const PlannerParams& params);

/// Frontier-point retry loop for one robot.
std::optional<HopDecision> plan_hop_for_robot(const SwarmView& view, std::size_t robot,
                                              const PlannerParams& params, Rng& rng);

/// Random-robot retry loop: picks untried robots uniformly until one yields
/// a decision or max_robot_attempts is spent.
std::optional<HopDecision> plan_next_hop(const SwarmView& view, const PlannerParams& params,
                                         Rng& rng);

}  // namespace lavatube
