#include "lavatube/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lavatube/ballistics.hpp"
#include "lavatube/error.hpp"
#include "lavatube/render.hpp"
#include "lavatube/snapshot_io.hpp"

namespace lavatube::commands {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory '" + dir.string() + "'");
  }
}

std::vector<fs::path> write_frames(const SnapshotLog& log, const fs::path& out_dir,
                                   std::span<const int> frames, bool skip_missing) {
  std::vector<fs::path> files;
  for (int t : frames) {
    const bool present = std::any_of(log.snapshots.begin(), log.snapshots.end(),
                                     [t](const Snapshot& s) { return s.timestep == t; });
    if (!present && skip_missing) continue;
    const fs::path p = out_dir / ("frame_" + std::to_string(t) + ".svg");
    write_file(p, render_frame_svg(log, t));
    files.push_back(p);
  }
  return files;
}

}  // namespace

ExploreOutput explore(const Config& config, std::uint64_t seed, const fs::path& out_dir,
                      std::span<const int> frames) {
  ensure_dir(out_dir);
  ExploreOutput out{run(config, seed), {}};

  std::ostringstream csv;
  write_coverage_csv(csv, out.result.coverage_series);
  write_file(out_dir / "coverage.csv", csv.str());
  out.files.push_back(out_dir / "coverage.csv");

  const SnapshotLog log = make_log(config, seed, out.result.snapshots);
  std::ostringstream jsonl;
  write_snapshots_jsonl(jsonl, log);
  write_file(out_dir / "snapshots.jsonl", jsonl.str());
  out.files.push_back(out_dir / "snapshots.jsonl");

  // Frames are drawn from the serialized stream, exactly as `render` would.
  std::istringstream replay(jsonl.str());
  for (auto& f : write_frames(read_snapshots_jsonl(replay), out_dir, frames, true)) {
    out.files.push_back(std::move(f));
  }
  return out;
}

std::vector<fs::path> render(const fs::path& snapshots, const fs::path& out_dir,
                             std::span<const int> frames) {
  std::ifstream in(snapshots);
  if (!in) throw std::runtime_error("cannot read '" + snapshots.string() + "'");
  const SnapshotLog log = read_snapshots_jsonl(in);
  ensure_dir(out_dir);
  return write_frames(log, out_dir, frames, false);
}

Body parse_body(const std::string& spec) {
  if (spec == "moon") return {"moon", ballistics::kMoonGravity};
  if (spec == "mars") return {"mars", ballistics::kMarsGravity};
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ValidationError("unknown body '" + spec + "' (use moon, mars or name=g)");
  }
  double g = 0.0;
  try {
    g = std::stod(spec.substr(eq + 1));
  } catch (const std::exception&) {
    throw ValidationError("body '" + spec + "': gravity is not a number");
  }
  detail::require_positive(g, "body gravity");
  return {spec.substr(0, eq), g};
}

std::string sweep_hops(const ballistics::FuelBudget& fuel, double g0, std::span<const Body> bodies,
                       std::span<const double> distances) {
  std::ostringstream o;
  o << "body,hop_distance,n_hops,total_distance\n";
  for (const Body& b : bodies) {
    for (double d : distances) {
      const auto hb = ballistics::hop_budget(fuel, b.gravity, d, g0);
      o << b.name << ',' << format_number(d) << ',' << hb.n_hops << ','
        << format_number(hb.total_distance) << '\n';
    }
  }
  return o.str();
}

std::string comms_range(const comms::CommParams& params) {
  std::ostringstream o;
  for (const auto& line : comms::itemized_budget(params)) {
    o << line.term << ' ' << format_number(line.value) << ' ' << line.unit << '\n';
  }
  return o.str();
}

std::string comms_time(const comms::CommParams& params, std::span<const int> hop_counts,
                       double chain_length_m) {
  detail::require_positive(chain_length_m, "chain length");
  std::ostringstream o;
  o << "hops,total_time_s\n";
  for (int n : hop_counts) {
    detail::require(n >= 1, "hop count must be >= 1");
    const auto hops = static_cast<std::size_t>(n);
    const double link = chain_length_m / n;
    detail::require(comms::link_usable(params, link),
                    "relay link of " + format_number(link) + " m does not close");
    // Bucket brigade: each robot relays only to its neighbours in the chain.
    std::vector<Vec2> nodes;
    std::vector<comms::Edge> edges;
    for (std::size_t i = 0; i <= hops; ++i) nodes.push_back({link * static_cast<double>(i), 0.0});
    for (std::size_t i = 0; i < hops; ++i) {
      edges.push_back({i, i + 1, link, comms::received_power(params, link),
                       comms::link_transmission_time(params, link)});
    }
    const comms::CommGraph chain(std::move(nodes), std::move(edges));
    const auto route = comms::shortest_path(chain, hops, 0);
    o << n << ',' << format_number(route->cost) << '\n';
  }
  return o.str();
}

std::string monte_carlo(const Config& config, std::span<const int> robot_counts, int n_trials,
                        std::uint64_t base_seed) {
  const auto stats = lavatube::monte_carlo(config, robot_counts, n_trials, base_seed);
  std::ostringstream o;
  o << "robot_count,timestep,mean_coverage,std_coverage\n";
  for (const auto& s : stats) {
    for (std::size_t k = 0; k < s.mean.size(); ++k) {
      o << s.robots << ',' << k << ',' << format_number(s.mean[k]) << ','
        << format_number(s.stddev[k]) << '\n';
    }
  }
  return o.str();
}

}  // namespace lavatube::commands
