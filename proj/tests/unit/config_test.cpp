#include <gtest/gtest.h>

#include <string>

#include "lavatube/config.hpp"
#include "lavatube/error.hpp"

using namespace lavatube;

namespace {

ConfigError parse_error(const std::string& doc) {
  try {
    parse_config(doc);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << doc;
  return ConfigError(ConfigError::Kind::Syntax, -1, "");
}

}  // namespace

TEST(Config, DefaultsDescribeReferenceScenario) {
  const Config c;
  EXPECT_EQ(c.environment.length, 50);
  EXPECT_EQ(c.environment.width, 8);
  EXPECT_EQ(c.environment.resolution, 100);
  EXPECT_EQ(c.environment.obstacles.size(), 6u);
  EXPECT_EQ(c.robots.explorers, 15);
  EXPECT_EQ(c.planner.vision_radius, 2);
  EXPECT_EQ(c.planner.comm_range, 5);
  EXPECT_EQ(c.planner.hop_range, 7);
  EXPECT_EQ(c.planner.mode, ExplorationMode::CaseI);
  EXPECT_EQ(c.simulation.timesteps, 20);
  EXPECT_EQ(c.base_position(), (Vec2{0, 4}));
  EXPECT_NO_THROW(validate(c));
}

TEST(Config, EmptyDocumentGivesDefaults) {
  EXPECT_EQ(parse_config(""), Config{});
  EXPECT_EQ(parse_config("{}"), Config{});
}

TEST(Config, ParsesEverySection) {
  const Config c = parse_config(R"(
environment:
  length: 20
  width: 4
  resolution: 10
  obstacles:
    - {x: 5, y: 2, radius: 0.5}
planner:
  mode: case_ii
  vision_radius: 1.5
  comm_range: 4
  hop_range: 6
  selection: random
  frontier_adjacency: 8
comms:
  tx_power_dbm: 20
ballistics:
  gravity: 3.71
  hard_budget: true
robots:
  explorers: 4
  base: {x: 0, y: 1}
simulation:
  timesteps: 5
  seed: 9
  return_timestep: 3
output:
  directory: results
  frames: [0, 5]
)");
  EXPECT_EQ(c.environment.length, 20);
  ASSERT_EQ(c.environment.obstacles.size(), 1u);
  EXPECT_EQ(c.environment.obstacles[0].radius, 0.5);
  EXPECT_EQ(c.planner.mode, ExplorationMode::CaseII);
  EXPECT_EQ(c.planner.selection, RobotSelection::Random);
  EXPECT_EQ(c.planner.frontier_adjacency, Adjacency::Eight);
  EXPECT_EQ(c.comms.tx_power_dbm, 20);
  EXPECT_EQ(c.ballistics.body.g_body, 3.71);
  EXPECT_TRUE(c.ballistics.hard_budget);
  EXPECT_EQ(c.robots.explorers, 4);
  EXPECT_EQ(c.base_position(), (Vec2{0, 1}));
  EXPECT_EQ(c.simulation.seed, 9u);
  EXPECT_EQ(c.simulation.return_timestep, 3);
  EXPECT_EQ(c.output.directory, "results");
  EXPECT_EQ(c.output.frames, (std::vector<int>{0, 5}));
}

TEST(Config, InvalidValueNamesField) {
  const auto e = parse_error("planner:\n  vision_radius: -1\n");
  EXPECT_EQ(e.kind(), ConfigError::Kind::Invalid);
  EXPECT_NE(std::string(e.what()).find("vision_radius"), std::string::npos);

  Config c;
  c.planner.comm_range = 0;
  try {
    validate(c);
    FAIL();
  } catch (const ValidationError& v) {
    EXPECT_NE(std::string(v.what()).find("comm_range"), std::string::npos);
  }
}

TEST(Config, UnknownKeyReportsLine) {
  const auto e = parse_error("planner:\n  vision_radius: 2\n  visoin_radius: 3\n");
  EXPECT_EQ(e.kind(), ConfigError::Kind::UnknownKey);
  EXPECT_EQ(e.line(), 3);
  EXPECT_NE(std::string(e.what()).find("visoin_radius"), std::string::npos);

  EXPECT_EQ(parse_error("bogus: 1\n").kind(), ConfigError::Kind::UnknownKey);
}

TEST(Config, SyntaxAndTypeErrors) {
  EXPECT_EQ(parse_error("planner: [1, 2\n").kind(), ConfigError::Kind::Syntax);
  EXPECT_EQ(parse_error("planner:\n  comm_range: far\n").line(), 2);
  EXPECT_EQ(parse_error("planner:\n  mode: case_iii\n").kind(), ConfigError::Kind::Invalid);
  EXPECT_THROW(load_config("/nonexistent/lavatube.yaml"), ConfigError);
}

TEST(Config, RenderRoundTrips) {
  Config c;
  EXPECT_EQ(parse_config(render_config(c)), c);

  c.environment = {12.5, 3, 20, {{{4, 1.5}, 0.3}}};
  c.planner.mode = ExplorationMode::CaseII;
  c.planner.selection = RobotSelection::Random;
  c.planner.frontier_adjacency = Adjacency::Eight;
  c.comms.frequency_hz = 915e6;
  c.ballistics.body.g_body = 0.1 + 0.2;
  c.robots.explorers = 2;
  c.robots.base = Vec2{0.25, 1.5};
  c.robots.positions = {{1, 1}, {1.5, 2}};
  c.simulation.return_coverage = 0.7;
  c.simulation.seed = 18446744073709551615ULL;
  c.output.directory = "it's \"quoted\" \\ here: #1";
  c.output.frames = {};
  EXPECT_EQ(parse_config(render_config(c)), c);
}
