#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "lavatube/comms.hpp"
#include "lavatube/config.hpp"
#include "lavatube/engine.hpp"

namespace lavatube::commands {

struct ExploreOutput {
  TrialResult result;
  std::vector<std::filesystem::path> files;
};

/// Runs one trial and writes coverage.csv, snapshots.jsonl and
/// frame_<timestep>.svg for every requested timestep within the run.
ExploreOutput explore(const Config& config, std::uint64_t seed,
                      const std::filesystem::path& out_dir, std::span<const int> frames);

/// Re-renders frames from an existing snapshots.jsonl.
std::vector<std::filesystem::path> render(const std::filesystem::path& snapshots,
                                          const std::filesystem::path& out_dir,
                                          std::span<const int> frames);

struct Body {
  std::string name;
  double gravity;
};

/// Resolves "moon", "mars" or "<name>=<g>".
Body parse_body(const std::string& spec);

/// CSV "body,hop_distance,n_hops,total_distance".
std::string sweep_hops(const ballistics::FuelBudget& fuel, double g0, std::span<const Body> bodies,
                       std::span<const double> distances);

/// Itemized budget, one "term value unit" line per entry.
std::string comms_range(const comms::CommParams& params);

/// CSV "hops,total_time_s" for an equally spaced bucket-brigade chain of the
/// given length, relaying the message from the far end to the base.
std::string comms_time(const comms::CommParams& params, std::span<const int> hop_counts,
                       double chain_length_m);

/// CSV "robot_count,timestep,mean_coverage,std_coverage".
std::string monte_carlo(const Config& config, std::span<const int> robot_counts, int n_trials,
                        std::uint64_t base_seed);

}  // namespace lavatube::commands
