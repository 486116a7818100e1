#include "lavatube/snapshot_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "lavatube/error.hpp"

namespace lavatube {

using nlohmann::json;

namespace {

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Explore: return "explore";
    case Phase::Return: return "return";
    case Phase::Returned: return "returned";
  }
  return "explore";
}

Phase phase_from(const std::string& s) {
  if (s == "explore") return Phase::Explore;
  if (s == "return") return Phase::Return;
  if (s == "returned") return Phase::Returned;
  throw ValidationError("unknown phase '" + s + "'");
}

json point_json(Vec2 p) { return json::array({p.x, p.y}); }
Vec2 point_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

}  // namespace

SnapshotLog make_log(const Config& config, std::uint64_t seed, std::vector<Snapshot> snapshots) {
  return {config.environment, config.planner.vision_radius, config.planner.comm_range,
          config.planner.mode, seed, std::move(snapshots)};
}

void write_snapshots_jsonl(std::ostream& out, const SnapshotLog& log) {
  json obstacles = json::array();
  for (const Circle& c : log.environment.obstacles) {
    obstacles.push_back({{"x", c.center.x}, {"y", c.center.y}, {"radius", c.radius}});
  }
  const json header = {
      {"type", "header"},
      {"environment",
       {{"length", log.environment.length},
        {"width", log.environment.width},
        {"resolution", log.environment.resolution},
        {"obstacles", obstacles}}},
      {"vision_radius", log.vision_radius},
      {"comm_range", log.comm_range},
      {"mode", log.mode == ExplorationMode::CaseI ? "case_i" : "case_ii"},
      {"seed", log.seed}};
  out << header.dump() << '\n';

  for (const Snapshot& s : log.snapshots) {
    json robots = json::array();
    for (std::size_t i = 0; i < s.poses.size(); ++i) {
      robots.push_back({{"id", i},
                        {"role", i == 0 ? "base" : "explorer"},
                        {"x", s.poses[i].x},
                        {"y", s.poses[i].y},
                        {"phi", s.poses[i].phi}});
    }
    json hops = json::array();
    for (const HopEvent& h : s.hops) {
      hops.push_back({{"robot", h.robot},
                      {"from", point_json(h.from)},
                      {"to", point_json(h.to)},
                      {"returning", h.returning}});
    }
    const json line = {{"type", "snapshot"},
                       {"timestep", s.timestep},
                       {"robots", robots},
                       {"hops", hops},
                       {"newly_explored", s.newly_explored},
                       {"coverage", s.coverage},
                       {"base_connected", s.base_connected},
                       {"swarm_connected", s.swarm_connected},
                       {"phase", phase_name(s.phase)}};
    out << line.dump() << '\n';
  }
}

SnapshotLog read_snapshots_jsonl(std::istream& in) {
  SnapshotLog log;
  std::string text;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, text)) {
    ++lineno;
    if (text.empty()) continue;
    try {
      const json j = json::parse(text);
      const auto type = j.at("type").get<std::string>();
      if (type == "header") {
        const json& e = j.at("environment");
        log.environment.length = e.at("length").get<double>();
        log.environment.width = e.at("width").get<double>();
        log.environment.resolution = e.at("resolution").get<int>();
        log.environment.obstacles.clear();
        for (const json& o : e.at("obstacles")) {
          log.environment.obstacles.push_back(
              {{o.at("x").get<double>(), o.at("y").get<double>()}, o.at("radius").get<double>()});
        }
        log.vision_radius = j.at("vision_radius").get<double>();
        log.comm_range = j.at("comm_range").get<double>();
        log.mode = j.at("mode").get<std::string>() == "case_ii" ? ExplorationMode::CaseII
                                                                : ExplorationMode::CaseI;
        log.seed = j.at("seed").get<std::uint64_t>();
        have_header = true;
      } else if (type == "snapshot") {
        Snapshot s;
        s.timestep = j.at("timestep").get<int>();
        for (const json& r : j.at("robots")) {
          s.poses.push_back(
              {r.at("x").get<double>(), r.at("y").get<double>(), r.at("phi").get<double>()});
        }
        for (const json& h : j.at("hops")) {
          s.hops.push_back({s.timestep, h.at("robot").get<std::size_t>(), point_from(h.at("from")),
                            point_from(h.at("to")), h.at("returning").get<bool>()});
        }
        s.newly_explored = j.at("newly_explored").get<std::size_t>();
        s.coverage = j.at("coverage").get<double>();
        s.base_connected = j.at("base_connected").get<bool>();
        s.swarm_connected = j.at("swarm_connected").get<bool>();
        s.phase = phase_from(j.at("phase").get<std::string>());
        log.snapshots.push_back(std::move(s));
      } else {
        throw ValidationError("unknown record type '" + type + "'");
      }
    } catch (const json::exception& e) {
      throw ValidationError("snapshots line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw ValidationError("snapshot stream has no header line");
  return log;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

void write_coverage_csv(std::ostream& out, const std::vector<double>& coverage_series) {
  out << "timestep,coverage\n";
  for (std::size_t k = 0; k < coverage_series.size(); ++k) {
    out << k << ',' << format_number(coverage_series[k]) << '\n';
  }
}

}  // namespace lavatube
