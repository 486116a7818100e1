#include "lavatube/config.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "lavatube/error.hpp"

namespace lavatube {

EnvironmentSpec Config::default_environment() {
  return {50.0, 8.0, 100,
          {{{7.0, 2.5}, 1.0},
           {{14.0, 5.5}, 1.5},
           {{22.0, 3.0}, 0.75},
           {{29.0, 5.0}, 1.25},
           {{37.0, 2.0}, 0.5},
           {{44.0, 5.5}, 1.0}}};
}

ConfigError::ConfigError(Kind kind, int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      kind_(kind),
      line_(line) {}

void validate(const Config& c) {
  validate(c.environment);
  validate(c.planner);
  comms::validate(c.comms);
  detail::require_positive(c.ballistics.body.g_body, "ballistics.gravity");
  detail::require_positive(c.ballistics.body.g0, "ballistics.g0");
  detail::require_positive(c.ballistics.fuel.isp, "ballistics.isp");
  detail::require(c.ballistics.fuel.m_prop > 0.0 && c.ballistics.fuel.m_prop < c.ballistics.fuel.m0,
                  "ballistics.propellant_mass must satisfy 0 < propellant_mass < wet_mass");
  detail::require_positive(c.ballistics.meters_per_unit, "ballistics.meters_per_unit");
  detail::require(c.robots.explorers >= 1, "robots.explorers must be >= 1");
  detail::require_positive(c.robots.cluster_spacing, "robots.cluster_spacing");
  detail::require(c.robots.positions.empty() ||
                      c.robots.positions.size() == static_cast<std::size_t>(c.robots.explorers),
                  "robots.positions must list exactly robots.explorers points");
  detail::require(c.simulation.timesteps >= 0, "simulation.timesteps must be >= 0");
  detail::require(c.simulation.localization_range_noise >= 0.0,
                  "simulation.localization_range_noise must be >= 0");
  detail::require(c.simulation.localization_bearing_noise >= 0.0,
                  "simulation.localization_bearing_noise must be >= 0");
  for (int f : c.output.frames) detail::require(f >= 0, "output.frames must be >= 0");
}

namespace {

using Kind = ConfigError::Kind;

int line_of(const YAML::Node& n) { return n.Mark().is_null() ? 0 : n.Mark().line + 1; }

template <typename T>
T scalar(const YAML::Node& n, const std::string& field) {
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(Kind::Invalid, line_of(n), field + ": malformed value");
  }
}

double positive(const YAML::Node& n, const std::string& field) {
  const auto v = scalar<double>(n, field);
  if (!(v > 0.0)) throw ConfigError(Kind::Invalid, line_of(n), field + " must be positive");
  return v;
}

double non_negative(const YAML::Node& n, const std::string& field) {
  const auto v = scalar<double>(n, field);
  if (!(v >= 0.0)) throw ConfigError(Kind::Invalid, line_of(n), field + " must be >= 0");
  return v;
}

int at_least(const YAML::Node& n, const std::string& field, int lo) {
  const auto v = scalar<int>(n, field);
  if (v < lo) {
    throw ConfigError(Kind::Invalid, line_of(n), field + " must be >= " + std::to_string(lo));
  }
  return v;
}

Vec2 point(const YAML::Node& n, const std::string& field);

using Handlers = std::map<std::string, std::function<void(const YAML::Node&)>>;

// Dispatches each key of a mapping to its handler; unknown keys are errors.
void walk(const YAML::Node& map, const std::string& section, const Handlers& handlers) {
  if (!map || map.IsNull()) return;
  if (!map.IsMap()) {
    throw ConfigError(Kind::Syntax, line_of(map), section + " must be a mapping");
  }
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    const auto it = handlers.find(key);
    const std::string field = section.empty() ? key : section + "." + key;
    if (it == handlers.end()) {
      throw ConfigError(Kind::UnknownKey, line_of(kv.first), "unknown key '" + field + "'");
    }
    it->second(kv.second);
  }
}

Vec2 point(const YAML::Node& n, const std::string& field) {
  Vec2 p;
  bool has_x = false, has_y = false;
  walk(n, field,
       {{"x", [&](const YAML::Node& v) { p.x = scalar<double>(v, field + ".x"); has_x = true; }},
        {"y", [&](const YAML::Node& v) { p.y = scalar<double>(v, field + ".y"); has_y = true; }}});
  if (!has_x || !has_y) throw ConfigError(Kind::Invalid, line_of(n), field + " needs x and y");
  return p;
}

template <typename Fn>
void each(const YAML::Node& seq, const std::string& field, Fn&& fn) {
  if (seq.IsNull()) return;
  if (!seq.IsSequence()) throw ConfigError(Kind::Syntax, line_of(seq), field + " must be a list");
  for (std::size_t i = 0; i < seq.size(); ++i) fn(seq[i], field + "[" + std::to_string(i) + "]");
}

void parse_environment(const YAML::Node& n, EnvironmentSpec& env) {
  walk(n, "environment",
       {{"length", [&](const YAML::Node& v) { env.length = positive(v, "environment.length"); }},
        {"width", [&](const YAML::Node& v) { env.width = positive(v, "environment.width"); }},
        {"resolution",
         [&](const YAML::Node& v) { env.resolution = at_least(v, "environment.resolution", 1); }},
        {"obstacles", [&](const YAML::Node& v) {
           env.obstacles.clear();
           each(v, "environment.obstacles", [&](const YAML::Node& o, const std::string& f) {
             Circle c;
             bool has_r = false;
             walk(o, f,
                  {{"x", [&](const YAML::Node& s) { c.center.x = scalar<double>(s, f + ".x"); }},
                   {"y", [&](const YAML::Node& s) { c.center.y = scalar<double>(s, f + ".y"); }},
                   {"radius", [&](const YAML::Node& s) {
                      c.radius = positive(s, f + ".radius");
                      has_r = true;
                    }}});
             if (!has_r) throw ConfigError(Kind::Invalid, line_of(o), f + " needs a radius");
             env.obstacles.push_back(c);
           });
         }}});
}

void parse_planner(const YAML::Node& n, PlannerParams& p) {
  walk(n, "planner",
       {{"mode",
         [&](const YAML::Node& v) {
           const auto s = scalar<std::string>(v, "planner.mode");
           if (s == "case_i") p.mode = ExplorationMode::CaseI;
           else if (s == "case_ii") p.mode = ExplorationMode::CaseII;
           else throw ConfigError(Kind::Invalid, line_of(v), "planner.mode must be case_i or case_ii");
         }},
        {"vision_radius",
         [&](const YAML::Node& v) { p.vision_radius = positive(v, "planner.vision_radius"); }},
        {"comm_range",
         [&](const YAML::Node& v) { p.comm_range = positive(v, "planner.comm_range"); }},
        {"hop_range",
         [&](const YAML::Node& v) { p.hop_range = non_negative(v, "planner.hop_range"); }},
        {"selection",
         [&](const YAML::Node& v) {
           const auto s = scalar<std::string>(v, "planner.selection");
           if (s == "round_robin") p.selection = RobotSelection::RoundRobin;
           else if (s == "random") p.selection = RobotSelection::Random;
           else throw ConfigError(Kind::Invalid, line_of(v), "planner.selection must be round_robin or random");
         }},
        {"frontier_adjacency",
         [&](const YAML::Node& v) {
           const auto k = scalar<int>(v, "planner.frontier_adjacency");
           if (k == 4) p.frontier_adjacency = Adjacency::Four;
           else if (k == 8) p.frontier_adjacency = Adjacency::Eight;
           else throw ConfigError(Kind::Invalid, line_of(v), "planner.frontier_adjacency must be 4 or 8");
         }},
        {"max_point_attempts",
         [&](const YAML::Node& v) { p.max_point_attempts = at_least(v, "planner.max_point_attempts", 1); }},
        {"max_robot_attempts",
         [&](const YAML::Node& v) { p.max_robot_attempts = at_least(v, "planner.max_robot_attempts", 1); }},
        {"distance_samples",
         [&](const YAML::Node& v) { p.distance_samples = at_least(v, "planner.distance_samples", 1); }}});
}

void parse_comms(const YAML::Node& n, comms::CommParams& c) {
  auto real = [](double& dst, const char* name) {
    return [&dst, name](const YAML::Node& v) { dst = scalar<double>(v, std::string("comms.") + name); };
  };
  auto pos = [](double& dst, const char* name) {
    return [&dst, name](const YAML::Node& v) { dst = positive(v, std::string("comms.") + name); };
  };
  walk(n, "comms",
       {{"tx_power_dbm", real(c.tx_power_dbm, "tx_power_dbm")},
        {"antenna_gain_db", real(c.antenna_gain_db, "antenna_gain_db")},
        {"rx_sensitivity_dbm", real(c.rx_sensitivity_dbm, "rx_sensitivity_dbm")},
        {"frequency_hz", pos(c.frequency_hz, "frequency_hz")},
        {"fixed_losses_db", real(c.fixed_losses_db, "fixed_losses_db")},
        {"excess_loss_db", real(c.excess_loss_db, "excess_loss_db")},
        {"bandwidth_hz", pos(c.bandwidth_hz, "bandwidth_hz")},
        {"noise_temperature_k", pos(c.noise_temperature_k, "noise_temperature_k")},
        {"pointing_loss_db", real(c.pointing_loss_db, "pointing_loss_db")},
        {"min_ebno_db", real(c.min_ebno_db, "min_ebno_db")},
        {"packet_size_bits", pos(c.packet_size_bits, "packet_size_bits")},
        {"data_size_bits", [&](const YAML::Node& v) {
           c.data_size_bits = non_negative(v, "comms.data_size_bits");
         }}});
}

void parse_ballistics(const YAML::Node& n, BallisticsConfig& b) {
  walk(n, "ballistics",
       {{"gravity", [&](const YAML::Node& v) { b.body.g_body = positive(v, "ballistics.gravity"); }},
        {"g0", [&](const YAML::Node& v) { b.body.g0 = positive(v, "ballistics.g0"); }},
        {"isp", [&](const YAML::Node& v) { b.fuel.isp = positive(v, "ballistics.isp"); }},
        {"wet_mass", [&](const YAML::Node& v) { b.fuel.m0 = positive(v, "ballistics.wet_mass"); }},
        {"propellant_mass",
         [&](const YAML::Node& v) { b.fuel.m_prop = positive(v, "ballistics.propellant_mass"); }},
        {"meters_per_unit",
         [&](const YAML::Node& v) { b.meters_per_unit = positive(v, "ballistics.meters_per_unit"); }},
        {"hard_budget",
         [&](const YAML::Node& v) { b.hard_budget = scalar<bool>(v, "ballistics.hard_budget"); }}});
}

void parse_robots(const YAML::Node& n, RobotsConfig& r) {
  walk(n, "robots",
       {{"explorers", [&](const YAML::Node& v) { r.explorers = at_least(v, "robots.explorers", 1); }},
        {"base", [&](const YAML::Node& v) { r.base = point(v, "robots.base"); }},
        {"cluster_spacing",
         [&](const YAML::Node& v) { r.cluster_spacing = positive(v, "robots.cluster_spacing"); }},
        {"positions", [&](const YAML::Node& v) {
           r.positions.clear();
           each(v, "robots.positions",
                [&](const YAML::Node& p, const std::string& f) { r.positions.push_back(point(p, f)); });
         }}});
}

void parse_simulation(const YAML::Node& n, SimulationConfig& s) {
  walk(n, "simulation",
       {{"timesteps", [&](const YAML::Node& v) { s.timesteps = at_least(v, "simulation.timesteps", 0); }},
        {"seed", [&](const YAML::Node& v) { s.seed = scalar<std::uint64_t>(v, "simulation.seed"); }},
        {"return_timestep",
         [&](const YAML::Node& v) { s.return_timestep = at_least(v, "simulation.return_timestep", 0); }},
        {"return_coverage",
         [&](const YAML::Node& v) { s.return_coverage = non_negative(v, "simulation.return_coverage"); }},
        {"localization_range_noise",
         [&](const YAML::Node& v) {
           s.localization_range_noise = non_negative(v, "simulation.localization_range_noise");
         }},
        {"localization_bearing_noise", [&](const YAML::Node& v) {
           s.localization_bearing_noise = non_negative(v, "simulation.localization_bearing_noise");
         }}});
}

void parse_output(const YAML::Node& n, OutputConfig& o) {
  walk(n, "output",
       {{"directory",
         [&](const YAML::Node& v) { o.directory = scalar<std::string>(v, "output.directory"); }},
        {"frames", [&](const YAML::Node& v) {
           o.frames.clear();
           each(v, "output.frames", [&](const YAML::Node& f, const std::string& name) {
             o.frames.push_back(at_least(f, name, 0));
           });
         }}});
}

std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::string point_str(Vec2 p) { return "{x: " + num(p.x) + ", y: " + num(p.y) + "}"; }

}  // namespace

Config parse_config(std::string_view document) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(document));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(Kind::Syntax, e.mark.line + 1, e.msg);
  }

  Config c;
  walk(root, "",
       {{"environment", [&](const YAML::Node& v) { parse_environment(v, c.environment); }},
        {"planner", [&](const YAML::Node& v) { parse_planner(v, c.planner); }},
        {"comms", [&](const YAML::Node& v) { parse_comms(v, c.comms); }},
        {"ballistics", [&](const YAML::Node& v) { parse_ballistics(v, c.ballistics); }},
        {"robots", [&](const YAML::Node& v) { parse_robots(v, c.robots); }},
        {"simulation", [&](const YAML::Node& v) { parse_simulation(v, c.simulation); }},
        {"output", [&](const YAML::Node& v) { parse_output(v, c.output); }}});

  try {
    validate(c);
  } catch (const ValidationError& e) {
    // Cross-field problems; attribute to the owning section where possible.
    const std::string msg = e.what();
    int line = 0;
    if (root.IsMap()) {
      for (const auto& kv : root) {
        const auto key = kv.first.as<std::string>();
        if (msg.rfind(key, 0) == 0 || (key == "environment" && msg.find("obstacle") != std::string::npos)) {
          line = line_of(kv.first);
        }
      }
    }
    throw ConfigError(Kind::Invalid, line, msg);
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(Kind::Syntax, 0, "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

namespace {

std::string single_quoted(const std::string& v) {
  std::string out = "'";
  for (char ch : v) {
    if (ch == '\'') out += '\'';
    out += ch;
  }
  return out + "'";
}

}  // namespace

std::string render_config(const Config& c) {
  std::ostringstream o;
  const auto& e = c.environment;
  o << "environment:\n"
    << "  length: " << num(e.length) << "\n"
    << "  width: " << num(e.width) << "\n"
    << "  resolution: " << e.resolution << "\n"
    << "  obstacles:" << (e.obstacles.empty() ? " []\n" : "\n");
  for (const Circle& ob : e.obstacles) {
    o << "    - {x: " << num(ob.center.x) << ", y: " << num(ob.center.y)
      << ", radius: " << num(ob.radius) << "}\n";
  }

  const auto& p = c.planner;
  o << "planner:\n"
    << "  mode: " << (p.mode == ExplorationMode::CaseI ? "case_i" : "case_ii") << "\n"
    << "  vision_radius: " << num(p.vision_radius) << "\n"
    << "  comm_range: " << num(p.comm_range) << "\n"
    << "  hop_range: " << num(p.hop_range) << "\n"
    << "  selection: " << (p.selection == RobotSelection::RoundRobin ? "round_robin" : "random") << "\n"
    << "  frontier_adjacency: " << (p.frontier_adjacency == Adjacency::Four ? 4 : 8) << "\n"
    << "  max_point_attempts: " << p.max_point_attempts << "\n"
    << "  max_robot_attempts: " << p.max_robot_attempts << "\n"
    << "  distance_samples: " << p.distance_samples << "\n";

  const auto& m = c.comms;
  o << "comms:\n"
    << "  tx_power_dbm: " << num(m.tx_power_dbm) << "\n"
    << "  antenna_gain_db: " << num(m.antenna_gain_db) << "\n"
    << "  rx_sensitivity_dbm: " << num(m.rx_sensitivity_dbm) << "\n"
    << "  frequency_hz: " << num(m.frequency_hz) << "\n"
    << "  fixed_losses_db: " << num(m.fixed_losses_db) << "\n"
    << "  excess_loss_db: " << num(m.excess_loss_db) << "\n"
    << "  bandwidth_hz: " << num(m.bandwidth_hz) << "\n"
    << "  noise_temperature_k: " << num(m.noise_temperature_k) << "\n"
    << "  pointing_loss_db: " << num(m.pointing_loss_db) << "\n"
    << "  min_ebno_db: " << num(m.min_ebno_db) << "\n"
    << "  packet_size_bits: " << num(m.packet_size_bits) << "\n"
    << "  data_size_bits: " << num(m.data_size_bits) << "\n";

  const auto& b = c.ballistics;
  o << "ballistics:\n"
    << "  gravity: " << num(b.body.g_body) << "\n"
    << "  g0: " << num(b.body.g0) << "\n"
    << "  isp: " << num(b.fuel.isp) << "\n"
    << "  wet_mass: " << num(b.fuel.m0) << "\n"
    << "  propellant_mass: " << num(b.fuel.m_prop) << "\n"
    << "  meters_per_unit: " << num(b.meters_per_unit) << "\n"
    << "  hard_budget: " << (b.hard_budget ? "true" : "false") << "\n";

  const auto& r = c.robots;
  o << "robots:\n"
    << "  explorers: " << r.explorers << "\n";
  if (r.base) o << "  base: " << point_str(*r.base) << "\n";
  o << "  cluster_spacing: " << num(r.cluster_spacing) << "\n"
    << "  positions:" << (r.positions.empty() ? " []\n" : "\n");
  for (Vec2 q : r.positions) o << "    - " << point_str(q) << "\n";

  const auto& s = c.simulation;
  o << "simulation:\n"
    << "  timesteps: " << s.timesteps << "\n"
    << "  seed: " << s.seed << "\n";
  if (s.return_timestep) o << "  return_timestep: " << *s.return_timestep << "\n";
  if (s.return_coverage) o << "  return_coverage: " << num(*s.return_coverage) << "\n";
  o << "  localization_range_noise: " << num(s.localization_range_noise) << "\n"
    << "  localization_bearing_noise: " << num(s.localization_bearing_noise) << "\n";

  o << "output:\n"
    << "  directory: " << single_quoted(c.output.directory) << "\n"
    << "  frames: [";
  for (std::size_t i = 0; i < c.output.frames.size(); ++i) {
    o << (i ? ", " : "") << c.output.frames[i];
  }
  o << "]\n";
  return o.str();
}

}  // namespace lavatube
