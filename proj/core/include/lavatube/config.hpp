#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lavatube/ballistics.hpp"
#include "lavatube/comms.hpp"
#include "lavatube/planner.hpp"
#include "lavatube/world.hpp"

namespace lavatube {

struct BallisticsConfig {
  ballistics::BodyParams body;
  ballistics::FuelBudget fuel;
  double meters_per_unit = 1.0;
  // When set, a robot whose remaining delta-v cannot pay for a hop stays put.
  bool hard_budget = false;

  bool operator==(const BallisticsConfig&) const = default;
};

struct RobotsConfig {
  int explorers = 15;
  std::optional<Vec2> base;  // defaults to (0, width / 2)
  double cluster_spacing = 0.4;
  std::vector<Vec2> positions;  // explicit explorer placement, overrides the cluster

  bool operator==(const RobotsConfig&) const = default;
};

struct SimulationConfig {
  int timesteps = 20;
  std::uint64_t seed = 1;
  // CASE_II: start retracing hops once either trigger fires.
  std::optional<int> return_timestep;
  std::optional<double> return_coverage;
  double localization_range_noise = 0.0;
  double localization_bearing_noise = 0.0;

  bool operator==(const SimulationConfig&) const = default;
};

struct OutputConfig {
  std::string directory = "out";
  std::vector<int> frames = {0, 2, 5, 10, 15, 20};

  bool operator==(const OutputConfig&) const = default;
};

struct Config {
  EnvironmentSpec environment = default_environment();
  PlannerParams planner;
  comms::CommParams comms;
  BallisticsConfig ballistics;
  RobotsConfig robots;
  SimulationConfig simulation;
  OutputConfig output;

  Vec2 base_position() const {
    return robots.base.value_or(Vec2{0.0, environment.width / 2.0});
  }

  /// 50 x 8 unit tube at 100 cells/unit with six obstacles along the axis.
  static EnvironmentSpec default_environment();

  bool operator==(const Config&) const = default;
};

/// Checks every embedded invariant; throws ValidationError naming the field.
void validate(const Config& config);

/// Configuration document problem with the 1-based source line (0 if unknown).
class ConfigError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownKey, Invalid };

  ConfigError(Kind kind, int line, const std::string& message);
  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Parses a YAML document. Omitted keys take their defaults; unknown keys,
/// malformed values and invariant violations raise ConfigError.
Config parse_config(std::string_view document);
Config load_config(const std::string& path);

/// Emits a YAML document that parse_config maps back to `config`.
std::string render_config(const Config& config);

}  // namespace lavatube
