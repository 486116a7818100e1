#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lavatube/config.hpp"
#include "lavatube/localization.hpp"
#include "lavatube/rng.hpp"
#include "lavatube/world.hpp"

namespace lavatube {

enum class Role { Base, Explorer };

/// CASE_II life cycle. CASE_I runs stay in Explore.
enum class Phase { Explore, Return, Returned };

struct HopRecord {
  int timestep = 0;
  Vec2 from;
  Vec2 to;
  double delta_v = 0.0;  // m/s
};

struct RobotState {
  std::size_t id = 0;
  Role role = Role::Explorer;
  Pose pose;      // ground truth
  Pose estimate;  // chained relative localization from the base
  double delta_v_used = 0.0;
  std::vector<HopRecord> hop_log;
};

struct HopEvent {
  int timestep = 0;
  std::size_t robot = 0;
  Vec2 from;
  Vec2 to;
  bool returning = false;
};

/// A forward hop that CASE_II may later retrace.
struct PendingHop {
  std::size_t robot = 0;
  Vec2 from;
};

struct SimState {
  int timestep = 0;
  Environment env;
  std::vector<RobotState> robots;  // robots[0] is the base
  Rng rng;
  Rng noise_rng;  // localization noise only, so the planner stream is unaffected
  std::size_t stall_count = 0;
  std::size_t newly_explored = 0;  // during the latest timestep
  Phase phase = Phase::Explore;
  std::vector<PendingHop> pending;  // forward hops not yet retraced, oldest first
  std::vector<HopEvent> last_hops;  // hops executed during the latest timestep

  std::vector<Vec2> positions() const;
  std::vector<Vec2> explorer_positions() const;
};

/// Per-timestep record; the JSONL snapshot stream is built from these.
struct Snapshot {
  int timestep = 0;
  std::vector<Pose> poses;  // index 0 is the base
  std::size_t newly_explored = 0;
  double coverage = 0.0;
  bool base_connected = false;
  bool swarm_connected = false;
  Phase phase = Phase::Explore;
  std::vector<HopEvent> hops;
};

struct TrialResult {
  std::vector<double> coverage_series;  // index = timestep, length K + 1
  std::size_t hop_count = 0;
  double total_delta_v = 0.0;
  std::size_t stall_count = 0;
  Phase final_phase = Phase::Explore;
  std::vector<Snapshot> snapshots;
};

/// Called after every executed hop with the post-hop state.
using HopObserver = std::function<void(const SimState&, const HopEvent&)>;

/// Places the base and explorers and applies the initial sensing sweep.
SimState init_simulation(const Config& config, std::uint64_t seed);

/// One sweep: each explorer in order plans and executes at most one hop.
void step(SimState& state, const Config& config, const HopObserver& observer = {});

Snapshot snapshot(const SimState& state, const Config& config);

TrialResult run(const Config& config, std::uint64_t seed, const HopObserver& observer = {});

struct CoverageStats {
  int robots = 0;
  std::vector<double> mean;    // per timestep
  std::vector<double> stddev;  // sample standard deviation
  std::vector<std::vector<double>> trials;
};

/// Trial t of every robot count uses seed base_seed + t. Trials run on up to
/// `threads` workers (0 picks the hardware concurrency); results do not depend
/// on the worker count.
std::vector<CoverageStats> monte_carlo(const Config& config, std::span<const int> robot_counts,
                                       int n_trials, std::uint64_t base_seed,
                                       unsigned threads = 0);

}  // namespace lavatube
