#include "lavatube/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "lavatube/ballistics.hpp"
#include "lavatube/error.hpp"
#include "lavatube/planner.hpp"

namespace lavatube {

std::vector<Vec2> SimState::positions() const {
  std::vector<Vec2> out;
  out.reserve(robots.size());
  for (const auto& r : robots) out.push_back(r.pose.position());
  return out;
}

std::vector<Vec2> SimState::explorer_positions() const {
  std::vector<Vec2> out;
  for (const auto& r : robots) {
    if (r.role == Role::Explorer) out.push_back(r.pose.position());
  }
  return out;
}

namespace {

// Nearest lattice points to the base, ordered by (distance, |row|, row, column).
std::vector<Vec2> cluster_positions(const Config& c, const Environment& env) {
  const Vec2 base = c.base_position();
  const double s = c.robots.cluster_spacing;
  const int n = c.robots.explorers;
  const int span = 4 * (static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))) + 2);

  struct Candidate {
    double dist;
    int abs_row;
    int row;
    int col;
    Vec2 p;
  };
  std::vector<Candidate> cand;
  for (int col = 1; col <= span; ++col) {
    for (int row = -span; row <= span; ++row) {
      const Vec2 p{base.x + s * col, base.y + s * row};
      if (!env.contains(p) || env.inside_any_obstacle(p)) continue;
      cand.push_back({distance(p, base), std::abs(row), row, col, p});
    }
  }
  std::sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.dist, a.abs_row, a.row, a.col) < std::tie(b.dist, b.abs_row, b.row, b.col);
  });
  if (cand.size() < static_cast<std::size_t>(n)) {
    throw ValidationError("not enough room near the entrance for the explorer cluster");
  }
  std::vector<Vec2> out;
  for (int k = 0; k < n; ++k) out.push_back(cand[static_cast<std::size_t>(k)].p);
  return out;
}

// Fewest-relay chain from the base (node 0) to `target` over the comm disk graph.
std::optional<std::vector<std::size_t>> relay_chain(const std::vector<Vec2>& pos, double range,
                                                    std::size_t target) {
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> prev(pos.size(), none);
  std::vector<bool> seen(pos.size(), false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size() && !seen[target]; ++head) {
    const std::size_t u = queue[head];
    for (std::size_t v = 0; v < pos.size(); ++v) {
      if (!seen[v] && distance(pos[u], pos[v]) <= range) {
        seen[v] = true;
        prev[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (!seen[target]) return std::nullopt;
  std::vector<std::size_t> chain;
  for (std::size_t v = target; v != none; v = prev[v]) chain.push_back(v);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

void update_estimate(SimState& s, const Config& c, std::size_t id) {
  RobotState& r = s.robots[id];
  if (r.role == Role::Base) {
    r.estimate = r.pose;
    return;
  }
  const auto chain = relay_chain(s.positions(), c.planner.comm_range, id);
  if (!chain) {
    r.estimate = r.pose;  // out of relay reach: keep the commanded pose
    return;
  }
  std::vector<Measurement> ms;
  for (std::size_t k = 1; k < chain->size(); ++k) {
    const Measurement m =
        relative_measurement(s.robots[(*chain)[k - 1]].pose, s.robots[(*chain)[k]].pose);
    ms.push_back(perturb(m, c.simulation.localization_range_noise,
                         c.simulation.localization_bearing_noise, s.noise_rng.engine()));
  }
  r.estimate = localize_chain(s.robots[0].pose, ms);
}

bool base_connected(const SimState& s, const Config& c) {
  return comm_connected(s.positions(), c.planner.comm_range, 0);
}

bool swarm_connected(const SimState& s, const Config& c) {
  return comm_connected(s.explorer_positions(), c.planner.comm_range, 0);
}

// Moves robot `id` to `target`, charging the optimal hop cost. Returns false
// when a hard fuel budget forbids the hop.
bool execute_hop(SimState& s, const Config& c, std::size_t id, Vec2 target, bool returning,
                 const HopObserver& observer) {
  RobotState& r = s.robots[id];
  const Vec2 from = r.pose.position();
  const double hop_m = distance(from, target) * c.ballistics.meters_per_unit;
  const double cost = ballistics::optimal_hop_cost(hop_m, c.ballistics.body.g_body);
  if (c.ballistics.hard_budget && !returning) {
    const double budget = ballistics::delta_v_budget(c.ballistics.fuel, c.ballistics.body.g0);
    if (r.delta_v_used + cost > budget) return false;
  }

  r.pose = {target.x, target.y, std::atan2(target.y - from.y, target.x - from.x)};
  r.delta_v_used += cost;
  r.hop_log.push_back({s.timestep + 1, from, target, cost});
  if (!returning) s.pending.push_back({id, from});
  s.newly_explored += s.env.mark_explored(target, c.planner.vision_radius);
  update_estimate(s, c, id);

  if (s.env.inside_any_obstacle(target)) {
    throw std::logic_error("robot " + std::to_string(id) + " landed inside an obstacle");
  }
  if (c.planner.mode == ExplorationMode::CaseI && !base_connected(s, c)) {
    throw std::logic_error("hop by robot " + std::to_string(id) + " broke the base link");
  }
  s.last_hops.push_back({s.timestep + 1, id, from, target, returning});
  if (observer) observer(s, s.last_hops.back());
  return true;
}

bool return_triggered(const SimState& s, const Config& c) {
  const auto& sim = c.simulation;
  return (sim.return_timestep && s.timestep >= *sim.return_timestep) ||
         (sim.return_coverage && s.env.coverage_fraction() >= *sim.return_coverage);
}

}  // namespace

SimState init_simulation(const Config& config, std::uint64_t seed) {
  validate(config);
  SimState s{0, Environment(config.environment), {}, Rng(seed),
             Rng(seed ^ 0x9e3779b97f4a7c15ULL), 0, 0, Phase::Explore, {}, {}};

  const Vec2 base = config.base_position();
  detail::require(s.env.contains(base), "base position lies outside the environment");
  detail::require(!s.env.inside_any_obstacle(base), "base position lies inside an obstacle");

  std::vector<Vec2> explorers = config.robots.positions;
  if (explorers.empty()) {
    explorers = cluster_positions(config, s.env);
  } else {
    for (std::size_t i = 0; i < explorers.size(); ++i) {
      const std::string tag = "explorer " + std::to_string(i + 1);
      detail::require(s.env.contains(explorers[i]), tag + " lies outside the environment");
      detail::require(!s.env.inside_any_obstacle(explorers[i]), tag + " lies inside an obstacle");
    }
  }

  s.robots.push_back({0, Role::Base, {base.x, base.y, 0.0}, {base.x, base.y, 0.0}, 0.0, {}});
  for (std::size_t i = 0; i < explorers.size(); ++i) {
    const Vec2 p = explorers[i];
    s.robots.push_back({i + 1, Role::Explorer, {p.x, p.y, 0.0}, {p.x, p.y, 0.0}, 0.0, {}});
  }

  if (config.planner.mode == ExplorationMode::CaseI) {
    detail::require(base_connected(s, config), "initial placement is not linked to the base");
  } else {
    detail::require(swarm_connected(s, config), "initial explorer placement is not linked");
  }

  for (const auto& r : s.robots) {
    s.newly_explored += s.env.mark_explored(r.pose.position(), config.planner.vision_radius);
  }
  for (std::size_t id = 1; id < s.robots.size(); ++id) update_estimate(s, config, id);
  return s;
}

void step(SimState& s, const Config& c, const HopObserver& observer) {
  s.newly_explored = 0;
  s.last_hops.clear();
  const std::size_t n = s.robots.size() - 1;

  if (s.phase == Phase::Explore && c.planner.mode == ExplorationMode::CaseII &&
      return_triggered(s, c)) {
    s.phase = Phase::Return;
  }

  if (s.phase == Phase::Explore) {
    for (std::size_t k = 0; k < n; ++k) {
      std::optional<HopDecision> d;
      const auto explorers = s.explorer_positions();
      const SwarmView view{s.env, explorers, s.robots[0].pose.position()};
      if (c.planner.selection == RobotSelection::RoundRobin) {
        d = plan_hop_for_robot(view, k, c.planner, s.rng);
      } else {
        d = plan_next_hop(view, c.planner, s.rng);
      }
      if (!d || !execute_hop(s, c, d->robot + 1, d->target, false, observer)) ++s.stall_count;
    }
  } else if (s.phase == Phase::Return) {
    // Undo forward hops newest first; every intermediate layout repeats an
    // earlier, linked one.
    for (std::size_t k = 0; k < n && !s.pending.empty() && !base_connected(s, c); ++k) {
      const PendingHop h = s.pending.back();
      s.pending.pop_back();
      execute_hop(s, c, h.robot, h.from, true, observer);
    }
    if (base_connected(s, c) || s.pending.empty()) s.phase = Phase::Returned;
  }
  ++s.timestep;
}

Snapshot snapshot(const SimState& s, const Config& c) {
  Snapshot snap;
  snap.timestep = s.timestep;
  for (const auto& r : s.robots) snap.poses.push_back(r.pose);
  snap.newly_explored = s.newly_explored;
  snap.coverage = s.env.coverage_fraction();
  snap.base_connected = base_connected(s, c);
  snap.swarm_connected = swarm_connected(s, c);
  snap.phase = s.phase;
  snap.hops = s.last_hops;
  return snap;
}

TrialResult run(const Config& config, std::uint64_t seed, const HopObserver& observer) {
  SimState s = init_simulation(config, seed);
  TrialResult out;
  out.snapshots.push_back(snapshot(s, config));
  out.coverage_series.push_back(s.env.coverage_fraction());
  for (int k = 0; k < config.simulation.timesteps; ++k) {
    step(s, config, observer);
    out.snapshots.push_back(snapshot(s, config));
    out.coverage_series.push_back(s.env.coverage_fraction());
  }
  for (const auto& r : s.robots) {
    out.hop_count += r.hop_log.size();
    out.total_delta_v += r.delta_v_used;
  }
  out.stall_count = s.stall_count;
  out.final_phase = s.phase;
  return out;
}

std::vector<CoverageStats> monte_carlo(const Config& config, std::span<const int> robot_counts,
                                       int n_trials, std::uint64_t base_seed, unsigned threads) {
  detail::require(n_trials >= 2, "monte carlo needs at least two trials");
  const std::size_t trials = static_cast<std::size_t>(n_trials);
  const std::size_t jobs = robot_counts.size() * trials;

  std::vector<Config> configs;
  for (int count : robot_counts) {
    Config c = config;
    c.robots.explorers = count;
    if (c.robots.positions.size() != static_cast<std::size_t>(count)) c.robots.positions.clear();
    validate(c);
    configs.push_back(std::move(c));
  }

  std::vector<std::vector<double>> series(jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs && !failed; j = next++) {
      try {
        series[j] = run(configs[j / trials], base_seed + j % trials).coverage_series;
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  std::vector<CoverageStats> out;
  for (std::size_t ci = 0; ci < robot_counts.size(); ++ci) {
    CoverageStats st;
    st.robots = robot_counts[ci];
    st.trials.assign(series.begin() + static_cast<std::ptrdiff_t>(ci * trials),
                     series.begin() + static_cast<std::ptrdiff_t>((ci + 1) * trials));
    const std::size_t steps = st.trials.front().size();
    for (std::size_t k = 0; k < steps; ++k) {
      double sum = 0.0;
      for (const auto& t : st.trials) sum += t[k];
      const double mean = sum / static_cast<double>(trials);
      double ss = 0.0;
      for (const auto& t : st.trials) ss += (t[k] - mean) * (t[k] - mean);
      st.mean.push_back(mean);
      st.stddev.push_back(std::sqrt(ss / static_cast<double>(trials - 1)));
    }
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace lavatube
