#include "lavatube/planner.hpp"

#include <algorithm>
#include <vector>

#include "lavatube/error.hpp"

namespace lavatube {

void validate(const PlannerParams& p) {
  detail::require_positive(p.vision_radius, "vision_radius");
  detail::require_positive(p.comm_range, "comm_range");
  detail::require(p.hop_range >= 0.0, "hop_range must be non-negative");
  detail::require(p.max_point_attempts >= 1, "max_point_attempts must be >= 1");
  detail::require(p.max_robot_attempts >= 1, "max_robot_attempts must be >= 1");
  detail::require(p.distance_samples >= 1, "distance_samples must be >= 1");
}

Vec2 hop_direction(Vec2 point, Vec2 robot) {
  const Vec2 d = point - robot;
  const double n = d.norm();
  detail::require(n > 0.0, "hop direction undefined: point coincides with robot");
  return {d.x / n, d.y / n};
}

bool verify_direction(Vec2 robot, Vec2 target, const Environment& env) {
  const auto known = env.revealed_obstacles();
  return !segment_intersects_obstacle(robot, target, known);
}

bool comm_connected(std::span<const Vec2> positions, double comm_range, std::size_t anchor) {
  const std::size_t n = positions.size();
  if (n == 0) return true;
  detail::require(anchor < n, "anchor outside node set");
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{anchor};
  seen[anchor] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && distance(positions[u], positions[v]) <= comm_range) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

bool swarm_connected_after(const SwarmView& view, std::size_t robot, Vec2 landing,
                           const PlannerParams& params) {
  std::vector<Vec2> nodes(view.explorers.begin(), view.explorers.end());
  nodes[robot] = landing;
  if (params.mode == ExplorationMode::CaseI) {
    nodes.push_back(view.base);
    return comm_connected(nodes, params.comm_range, nodes.size() - 1);
  }
  return comm_connected(nodes, params.comm_range, 0);
}

std::optional<double> compute_hop_distance(const SwarmView& view, std::size_t robot,
                                           Vec2 direction, double reach,
                                           const PlannerParams& params) {
  const double limit = std::min(params.hop_range, reach);
  if (!(limit > 0.0)) return std::nullopt;

  const Vec2 origin = view.explorers[robot];
  const auto known = view.env.revealed_obstacles();
  const int n = params.distance_samples;
  for (int k = n; k >= 1; --k) {
    const double d = limit * k / n;
    const Vec2 landing = origin + direction * d;
    if (!view.env.point_in_explored(landing)) continue;
    if (segment_intersects_obstacle(origin, landing, known)) continue;
    if (!swarm_connected_after(view, robot, landing, params)) continue;
    return d;
  }
  return std::nullopt;
}

namespace {

std::optional<HopDecision> try_robot(const SwarmView& view, std::size_t robot,
                                     std::span<const Vec2> frontier, const PlannerParams& params,
                                     Rng& rng) {
  const Vec2 origin = view.explorers[robot];
  for (int attempt = 0; attempt < params.max_point_attempts; ++attempt) {
    const Vec2 point = frontier[rng.index(frontier.size())];
    if (point == origin) continue;
    if (!verify_direction(origin, point, view.env)) continue;
    const Vec2 u = hop_direction(point, origin);
    const auto d = compute_hop_distance(view, robot, u, distance(point, origin), params);
    if (!d) continue;
    return HopDecision{robot, u, origin + u * *d, *d};
  }
  return std::nullopt;
}

}  // namespace

std::optional<HopDecision> plan_hop_for_robot(const SwarmView& view, std::size_t robot,
                                              const PlannerParams& params, Rng& rng) {
  detail::require(robot < view.explorers.size(), "robot index out of range");
  const auto frontier = view.env.free_boundary(params.frontier_adjacency);
  if (frontier.empty()) return std::nullopt;
  return try_robot(view, robot, frontier, params, rng);
}

std::optional<HopDecision> plan_next_hop(const SwarmView& view, const PlannerParams& params,
                                         Rng& rng) {
  detail::require(!view.explorers.empty(), "no explorer robots");
  const auto frontier = view.env.free_boundary(params.frontier_adjacency);
  if (frontier.empty()) return std::nullopt;

  std::vector<std::size_t> untried(view.explorers.size());
  for (std::size_t i = 0; i < untried.size(); ++i) untried[i] = i;
  for (int attempt = 0; attempt < params.max_robot_attempts && !untried.empty(); ++attempt) {
    const std::size_t pick = rng.index(untried.size());
    const std::size_t robot = untried[pick];
    untried.erase(untried.begin() + static_cast<std::ptrdiff_t>(pick));
    if (auto decision = try_robot(view, robot, frontier, params, rng)) return decision;
  }
  return std::nullopt;
}

}  // namespace lavatube
