#pragma once

#include "lavatube/config.hpp"

namespace fixtures {

/// The reference Case I scenario at a CI-friendly 10 cells per unit.
inline lavatube::Config case_one_fast() {
  lavatube::Config c;
  c.environment.resolution = 10;
  return c;
}

/// Six-robot detached swarm that starts retracing after `return_at` steps.
inline lavatube::Config case_two_fast(int return_at = 8, int timesteps = 40) {
  lavatube::Config c = case_one_fast();
  c.planner.mode = lavatube::ExplorationMode::CaseII;
  c.robots.explorers = 6;
  c.simulation.timesteps = timesteps;
  c.simulation.return_timestep = return_at;
  return c;
}

}  // namespace fixtures
