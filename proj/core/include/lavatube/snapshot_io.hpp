#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lavatube/config.hpp"
#include "lavatube/engine.hpp"

namespace lavatube {

/// Everything a renderer needs to redraw a run: the scene header plus the
/// per-timestep snapshots.
struct SnapshotLog {
  EnvironmentSpec environment;
  double vision_radius = 0.0;
  double comm_range = 0.0;
  ExplorationMode mode = ExplorationMode::CaseI;
  std::uint64_t seed = 0;
  std::vector<Snapshot> snapshots;
};

SnapshotLog make_log(const Config& config, std::uint64_t seed, std::vector<Snapshot> snapshots);

/// JSON Lines: one header object, then one object per timestep.
///
///   {"type":"header","environment":{...},"vision_radius":..,"comm_range":..,"mode":"case_i","seed":..}
///   {"type":"snapshot","timestep":k,"robots":[{"id":0,"role":"base","x":..,"y":..,"phi":..},...],
///    "hops":[{"robot":i,"from":[x,y],"to":[x,y],"returning":false},...],
///    "newly_explored":n,"coverage":f,"base_connected":b,"swarm_connected":b,"phase":"explore"}
void write_snapshots_jsonl(std::ostream& out, const SnapshotLog& log);
SnapshotLog read_snapshots_jsonl(std::istream& in);

/// "timestep,coverage" with one row per snapshot.
void write_coverage_csv(std::ostream& out, const std::vector<double>& coverage_series);

/// Shortest round-trip decimal form.
std::string format_number(double v);

}  // namespace lavatube
