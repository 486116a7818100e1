#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lavatube/error.hpp"
#include "lavatube/planner.hpp"
#include "oracles.hpp"

using namespace lavatube;

TEST(HopDirection, Examples) {
  const Vec2 u = hop_direction({3, 4}, {0, 0});
  EXPECT_DOUBLE_EQ(u.x, 0.6);
  EXPECT_DOUBLE_EQ(u.y, 0.8);
  EXPECT_EQ(hop_direction({1, 0}, {0, 0}), (Vec2{1, 0}));
  EXPECT_THROW(hop_direction({1, 1}, {1, 1}), ValidationError);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u01(-50, 50);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 a{u01(rng), u01(rng)}, b{u01(rng), u01(rng)};
    EXPECT_NEAR(hop_direction(a, b).norm(), 1.0, 1e-9);
  }
}

TEST(VerifyDirection, UsesOnlyRevealedObstacles) {
  Environment env({20, 8, 10, {{{10, 4}, 1}}});
  EXPECT_TRUE(verify_direction({2, 4}, {18, 4}, env));  // not yet sensed
  EXPECT_TRUE(verify_direction({2, 1}, {18, 1}, env));
  env.mark_explored({8, 4}, 2);
  ASSERT_TRUE(env.obstacle_revealed(0));
  EXPECT_FALSE(verify_direction({2, 4}, {18, 4}, env));
  EXPECT_TRUE(verify_direction({2, 1}, {18, 1}, env));
}

TEST(CommConnected, Examples) {
  std::vector<Vec2> chain;
  for (int i = 0; i < 6; ++i) chain.push_back({0.9 * 5 * i, 0});
  EXPECT_TRUE(comm_connected(chain, 5, 0));
  EXPECT_TRUE(comm_connected(chain, 5, 5));

  std::vector<Vec2> lonely{{0, 0}, {1, 0}, {6.5, 0}};
  EXPECT_FALSE(comm_connected(lonely, 5, 0));
  EXPECT_TRUE(comm_connected(std::vector<Vec2>{{7, 7}}, 5, 0));
}

TEST(CommConnected, MatchesTransitiveClosure) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 20);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Vec2> pts;
    std::vector<oracle::P> ops;
    for (int i = 0; i < 8; ++i) {
      pts.push_back({u(rng), u(rng)});
      ops.push_back({pts.back().x, pts.back().y});
    }
    const auto closure = oracle::transitive_closure(ops, 5);
    for (std::size_t anchor = 0; anchor < 8; ++anchor) {
      bool all = true;
      for (std::size_t j = 0; j < 8; ++j) all = all && closure[anchor][j];
      EXPECT_EQ(comm_connected(pts, 5, anchor), all);
    }
  }
}

TEST(ComputeHopDistance, LoneExplorerNextToBase) {
  Environment env({20, 8, 10, {}});
  env.mark_explored({8, 4}, 9);
  const std::vector<Vec2> explorers{{0.5, 4}};
  const SwarmView view{env, explorers, {0, 4}};
  PlannerParams params;  // comm 5, hop 7, 50 samples

  const auto d = compute_hop_distance(view, 0, {1, 0}, 10, params);
  // Brute force over the same sample grid.
  double expected = -1;
  for (int k = 1; k <= params.distance_samples; ++k) {
    const double s = 7.0 * k / params.distance_samples;
    const Vec2 land{0.5 + s, 4};
    if (env.point_in_explored(land) && distance(land, {0, 4}) <= 5) expected = s;
  }
  ASSERT_TRUE(d);
  EXPECT_DOUBLE_EQ(*d, expected);
  EXPECT_NEAR(*d, 4.48, 1e-12);
}

TEST(ComputeHopDistance, NothingExploredAhead) {
  Environment env({20, 8, 10, {}});
  env.mark_explored({1, 4}, 0.5);
  const std::vector<Vec2> explorers{{1.6, 4}};  // just past the explored rim
  const SwarmView view{env, explorers, {0, 4}};
  EXPECT_FALSE(compute_hop_distance(view, 0, {1, 0}, 10, PlannerParams{}));
}

TEST(ComputeHopDistance, CaseTwoIgnoresBase) {
  Environment env({100, 8, 10, {}});
  env.mark_explored({50, 4}, 60);
  const std::vector<Vec2> explorers{{40, 4}, {42, 4}};
  const SwarmView view{env, explorers, {0, 4}};
  PlannerParams params;
  params.mode = ExplorationMode::CaseII;
  // Robot 1 can go up to 3 units past robot 0 ... limited by swarm link 5.
  const auto d = compute_hop_distance(view, 1, {1, 0}, 20, params);
  ASSERT_TRUE(d);
  EXPECT_NEAR(*d, 7.0 * 21 / 50, 1e-12);  // largest sample with 2 + s <= 5
  params.mode = ExplorationMode::CaseI;
  EXPECT_FALSE(compute_hop_distance(view, 1, {1, 0}, 20, params));
}

TEST(ComputeHopDistance, RespectsRevealedObstacles) {
  Environment env({20, 8, 10, {{{4, 4}, 0.5}}});
  env.mark_explored({3, 4}, 4);
  const std::vector<Vec2> explorers{{1, 4}};
  const SwarmView view{env, explorers, {0, 4}};
  const auto d = compute_hop_distance(view, 0, {1, 0}, 10, PlannerParams{});
  ASSERT_TRUE(d);
  EXPECT_LT(1 + *d, 3.5);
}

TEST(PlanNextHop, EmptyFrontier) {
  Environment env({4, 4, 5, {}});
  const std::vector<Vec2> explorers{{1, 1}};
  Rng rng(1);
  EXPECT_FALSE(plan_next_hop({env, explorers, {0, 2}}, PlannerParams{}, rng));
  env.mark_explored({2, 2}, 10);
  EXPECT_FALSE(plan_next_hop({env, explorers, {0, 2}}, PlannerParams{}, rng));
}

TEST(PlanNextHop, SingleReachableFrontierPoint) {
  Environment env({3, 1, 1, {}});
  env.mark_explored({1, 0.5}, 0.6);  // cells 0 and 1 explored, cell 2 not
  ASSERT_EQ(env.free_boundary(), (std::vector<Vec2>{{1.5, 0.5}}));
  const std::vector<Vec2> explorers{{0.2, 0.5}};
  Rng rng(9);
  const auto d = plan_next_hop({env, explorers, {0, 0.5}}, PlannerParams{}, rng);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->robot, 0u);
  EXPECT_NEAR(d->target.x, 1.5, 1e-12);
  EXPECT_NEAR(d->target.y, 0.5, 1e-12);
  EXPECT_NEAR(d->distance, 1.3, 1e-12);
}

TEST(PlanNextHop, DeterministicForSeed) {
  Environment env({30, 8, 10, {{{8, 3}, 1}}});
  const std::vector<Vec2> explorers{{0.4, 4}, {0.8, 4}, {0.4, 4.4}};
  for (Vec2 p : explorers) env.mark_explored(p, 2);
  env.mark_explored({0, 4}, 2);
  for (RobotSelection sel : {RobotSelection::Random, RobotSelection::RoundRobin}) {
    PlannerParams params;
    params.selection = sel;
    Rng a(31), b(31);
    const auto da = plan_next_hop({env, explorers, {0, 4}}, params, a);
    const auto db = plan_next_hop({env, explorers, {0, 4}}, params, b);
    ASSERT_TRUE(da && db);
    EXPECT_EQ(da->robot, db->robot);
    EXPECT_EQ(da->target, db->target);
  }
}

TEST(PlanNextHop, AcceptedDecisionsSatisfyAllConstraints) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> ux(1, 19), uy(1, 7), ur(1, 3);
  for (ExplorationMode mode : {ExplorationMode::CaseI, ExplorationMode::CaseII}) {
    for (int trial = 0; trial < 60; ++trial) {
      Environment env({20, 8, 10, {{{6, 4}, 1.2}, {{13, 2.5}, 0.8}, {{15, 6}, 1}}});
      std::vector<Vec2> explorers;
      Vec2 last{0.5, 4};
      for (int i = 0; i < 4; ++i) {
        explorers.push_back(last);
        env.mark_explored(last, 2);
        last = last + Vec2{1.5, 0};
      }
      for (int k = 0; k < 3; ++k) env.mark_explored({ux(gen), uy(gen)}, ur(gen));
      PlannerParams params;
      params.mode = mode;
      Rng rng(static_cast<std::uint64_t>(trial));
      const SwarmView view{env, explorers, {0, 4}};
      const auto d = plan_next_hop(view, params, rng);
      if (!d) continue;
      const Vec2 from = explorers[d->robot];
      EXPECT_NEAR(d->direction.norm(), 1.0, 1e-9);
      EXPECT_GT(d->distance, 0.0);
      EXPECT_LE(d->distance, params.hop_range);
      EXPECT_NEAR(distance(d->target, from + d->direction * d->distance), 0.0, 1e-12);
      EXPECT_TRUE(env.point_in_explored(d->target));
      EXPECT_FALSE(segment_intersects_obstacle(from, d->target, env.revealed_obstacles()));
      EXPECT_FALSE(env.inside_any_obstacle(d->target));
      auto after = explorers;
      after[d->robot] = d->target;
      if (mode == ExplorationMode::CaseI) {
        after.push_back({0, 4});
        EXPECT_TRUE(comm_connected(after, params.comm_range, after.size() - 1));
      } else {
        EXPECT_TRUE(comm_connected(after, params.comm_range, 0));
      }
    }
  }
}
