// lavatube: batch experiments for the hopping-robot lava tube simulator.
//
// Exit codes: 0 success, 1 validation error, 2 runtime error.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lavatube/commands.hpp"
#include "lavatube/config.hpp"
#include "lavatube/error.hpp"

namespace fs = std::filesystem;
using namespace lavatube;

namespace {

Config config_from(const std::string& path) { return path.empty() ? Config{} : load_config(path); }

// Prints to stdout, and also writes `name` under `out` when given.
void emit(const std::string& text, const std::string& out, const std::string& name) {
  std::cout << text;
  if (out.empty()) return;
  fs::create_directories(out);
  std::ofstream f(fs::path(out) / name, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + (fs::path(out) / name).string() + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-robot lava tube exploration simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::vector<int> frames;
  std::vector<int> robots;
  int trials = 10;

  auto* explore = app.add_subcommand("explore", "Run one exploration trial and write CSV/JSONL/SVG");
  explore->add_option("--config", config_path, "YAML configuration")->check(CLI::ExistingFile);
  explore->add_option("--seed", seed, "Random seed (defaults to simulation.seed)");
  explore->add_option("--out", out_dir, "Output directory (defaults to output.directory)");
  explore->add_option("--frames", frames, "Timesteps to render")->delimiter(',');

  std::vector<std::string> bodies{"moon", "mars"};
  std::vector<double> distances{1, 2, 5, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  auto* sweep = app.add_subcommand("sweep-hops", "Hop count and range versus hop distance");
  sweep->add_option("--config", config_path, "YAML configuration (fuel budget)")
      ->check(CLI::ExistingFile);
  sweep->add_option("--bodies", bodies, "moon, mars or name=g")->delimiter(',');
  sweep->add_option("--distances", distances, "Hop distances in metres")->delimiter(',');
  sweep->add_option("--out", out_dir, "Also write sweep_hops.csv here");

  std::string comms_mode = "range";
  std::vector<int> hop_counts{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20};
  double chain_length = 450.0;
  auto* comms_cmd = app.add_subcommand("comms", "Link budget report or relay transmission times");
  comms_cmd->add_option("--config", config_path, "YAML configuration (comms section)")
      ->check(CLI::ExistingFile);
  comms_cmd->add_option("--mode", comms_mode, "range or time")
      ->check(CLI::IsMember({"range", "time"}));
  comms_cmd->add_option("--hops", hop_counts, "Relay hop counts (time mode)")->delimiter(',');
  comms_cmd->add_option("--length", chain_length, "Chain length in metres (time mode)");
  comms_cmd->add_option("--out", out_dir, "Also write the report here");

  auto* mc = app.add_subcommand("monte-carlo", "Mean/std coverage over seeded trials");
  mc->add_option("--config", config_path, "YAML configuration")->check(CLI::ExistingFile);
  mc->add_option("--robots", robots, "Explorer counts")->delimiter(',')->required();
  mc->add_option("--trials", trials, "Trials per robot count")->check(CLI::Range(2, 1 << 20));
  mc->add_option("--seed", seed, "Base seed (defaults to simulation.seed)");
  mc->add_option("--out", out_dir, "Also write monte_carlo.csv here");

  std::string snapshots;
  auto* render = app.add_subcommand("render", "Render SVG frames from snapshots.jsonl");
  render->add_option("--snapshots", snapshots, "snapshots.jsonl from explore")
      ->required()
      ->check(CLI::ExistingFile);
  render->add_option("--out", out_dir, "Output directory")->required();
  render->add_option("--frames", frames, "Timesteps to render")->delimiter(',')->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*explore) {
      const Config c = config_from(config_path);
      const auto dir = out_dir.empty() ? c.output.directory : out_dir;
      const auto& fr = frames.empty() ? c.output.frames : frames;
      const auto res = commands::explore(c, seed.value_or(c.simulation.seed), dir, fr);
      for (const auto& f : res.files) std::cout << f.string() << '\n';
      std::cout << "final coverage " << res.result.coverage_series.back() << ", hops "
                << res.result.hop_count << ", stalls " << res.result.stall_count << '\n';
    } else if (*sweep) {
      const Config c = config_from(config_path);
      std::vector<commands::Body> bs;
      for (const auto& b : bodies) bs.push_back(commands::parse_body(b));
      emit(commands::sweep_hops(c.ballistics.fuel, c.ballistics.body.g0, bs, distances), out_dir,
           "sweep_hops.csv");
    } else if (*comms_cmd) {
      const Config c = config_from(config_path);
      if (comms_mode == "range") {
        emit(commands::comms_range(c.comms), out_dir, "comms_range.txt");
      } else {
        emit(commands::comms_time(c.comms, hop_counts, chain_length), out_dir, "comms_time.csv");
      }
    } else if (*mc) {
      const Config c = config_from(config_path);
      emit(commands::monte_carlo(c, robots, trials, seed.value_or(c.simulation.seed)), out_dir,
           "monte_carlo.csv");
    } else if (*render) {
      for (const auto& f : commands::render(snapshots, out_dir, frames)) {
        std::cout << f.string() << '\n';
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const DisconnectedError& e) {
    std::cerr << "link budget: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
