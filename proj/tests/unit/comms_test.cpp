#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "lavatube/comms.hpp"
#include "lavatube/error.hpp"
#include "oracles.hpp"

using namespace lavatube;
using namespace lavatube::comms;

namespace {

// Link budget terms recomputed from first principles (wavelength form).
double hand_fspl(double d, double f) {
  const double lambda = 299792458.0 / f;
  return 10 * std::log10(std::pow(4 * 3.14159265358979323846 * d / lambda, 2));
}

double hand_rate(double d) {
  const double pr_dbm = 25 + 1 - 12 - hand_fspl(d, 2.4e9);
  const double noise_w = 1.380649e-23 * 200 * 20e3;
  const double signal_w = std::pow(10, (pr_dbm - 18) / 10) / 1000;
  return 20e3 * std::log2(1 + signal_w / noise_w);
}

std::vector<std::vector<double>> weight_matrix(const CommGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> w(n, std::vector<double>(n, std::nan("")));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (auto c = g.edge_cost(a, b)) w[a][b] = *c;
  return w;
}

std::vector<Vec2> random_positions(std::mt19937_64& rng, std::size_t n, double extent) {
  std::uniform_real_distribution<double> u(0, extent);
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({u(rng), u(rng)});
  return out;
}

}  // namespace

TEST(FreeSpacePathLoss, Examples) {
  EXPECT_NEAR(free_space_path_loss(500, 2.4e9), hand_fspl(500, 2.4e9), 1e-9);
  EXPECT_NEAR(free_space_path_loss(500, 2.4e9), 94.0, 0.05);
  EXPECT_NEAR(free_space_path_loss(1000, 2.4e9) - free_space_path_loss(500, 2.4e9),
              20 * std::log10(2.0), 1e-9);
  EXPECT_NEAR(free_space_path_loss(500, 4.8e9) - free_space_path_loss(500, 2.4e9),
              20 * std::log10(2.0), 1e-9);
  EXPECT_THROW(free_space_path_loss(0, 2.4e9), ValidationError);
  EXPECT_THROW(free_space_path_loss(10, -1), ValidationError);
}

TEST(ReceivedPower, LinkBudget) {
  const CommParams p;
  EXPECT_NEAR(received_power(p, 500), 25 + 1 - 12 - hand_fspl(500, 2.4e9), 1e-9);
  EXPECT_NEAR(received_power(p, 500), -80.0, 0.05);
  double last = std::numeric_limits<double>::infinity();
  for (double d = 1e-3; d < 5000; d *= 1.7) {
    EXPECT_LT(received_power(p, d), last);
    last = received_power(p, d);
  }
  EXPECT_NEAR(received_power(p, max_range(p)), p.rx_sensitivity_dbm, 1e-9);
}

TEST(MaxRange, ReferenceScalingAndBisectionOracle) {
  CommParams p;
  const double r = max_range(p);
  EXPECT_NEAR(r, 500, 25);
  const double root = oracle::bisect(
      [&](double d) { return received_power(p, d) - p.rx_sensitivity_dbm; }, 1, 10000, 1e-6);
  EXPECT_NEAR(r, root, 0.1);

  CommParams louder = p;
  louder.tx_power_dbm += 6;
  EXPECT_NEAR(max_range(louder) / r, 2.0, 0.01);

  CommParams sensitive = p;
  sensitive.rx_sensitivity_dbm = -86;
  EXPECT_NEAR(max_range(sensitive) / r, std::pow(10, 6.0 / 20), 1e-9);

  CommParams dead = p;
  dead.tx_power_dbm = -100;
  EXPECT_THROW(max_range(dead), ValidationError);
}

TEST(ShannonRate, UnitSnrAndMonotone) {
  CommParams p;
  // Pick tx power so that SNR is exactly 0 dB at 100 m.
  p.tx_power_dbm -= snr_db(p, 100);
  EXPECT_NEAR(snr_db(p, 100), 0.0, 1e-9);
  EXPECT_NEAR(shannon_rate(p, 100), 20000.0, 1e-6);

  const CommParams ref;
  double last = std::numeric_limits<double>::infinity();
  for (double d = 1; d < 20000; d *= 1.3) {
    EXPECT_LT(shannon_rate(ref, d), last);
    EXPECT_GT(shannon_rate(ref, d), 0.0);
    last = shannon_rate(ref, d);
  }
}

TEST(ShannonRate, HandComputedAt400m) {
  const CommParams p;
  EXPECT_NEAR(noise_floor_dbm(p), -132.5786, 1e-4);
  EXPECT_NEAR(shannon_rate(p, 400), hand_rate(400), 1e-6 * hand_rate(400));
  EXPECT_NEAR(shannon_rate(p, 400), 242409.96, 0.01);
}

TEST(LinkUsable, EbNoFloor) {
  CommParams p;
  EXPECT_TRUE(link_usable(p, 100));
  EXPECT_FALSE(link_usable(p, 600));
  p.min_ebno_db = 60;  // far beyond anything the budget reaches
  EXPECT_FALSE(link_usable(p, 100));
}

TEST(BuildAdjacency, Examples) {
  const CommParams p;
  const std::vector<Vec2> near{{0, 0}, {100, 0}};
  const CommGraph g = build_adjacency(near, p);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_DOUBLE_EQ(g.edges()[0].cost, link_transmission_time(p, 100));

  const std::vector<Vec2> far{{0, 0}, {1000, 0}};
  EXPECT_TRUE(build_adjacency(far, p).edges().empty());

  const std::vector<Vec2> one{{3, 3}};
  EXPECT_TRUE(build_adjacency(one, p).edges().empty());
}

TEST(BuildAdjacency, SymmetricWithEqualCost) {
  std::mt19937_64 rng(8);
  const CommParams p;
  const CommGraph g = build_adjacency(random_positions(rng, 12, 1200), p);
  for (std::size_t a = 0; a < g.node_count(); ++a) {
    for (std::size_t b = 0; b < g.node_count(); ++b) {
      EXPECT_EQ(g.edge_cost(a, b), g.edge_cost(b, a));
      if (a == b) EXPECT_FALSE(g.edge_cost(a, b));
    }
  }
  for (const Edge& e : g.edges()) EXPECT_GT(shannon_rate(p, e.distance), 0.0);
}

TEST(ShortestPath, TrivialCases) {
  const CommParams p;
  const std::vector<Vec2> line{{0, 0}, {400, 0}, {800, 0}};
  const CommGraph g = build_adjacency(line, p);
  const auto self = shortest_path(g, 1, 1);
  ASSERT_TRUE(self);
  EXPECT_EQ(self->nodes, std::vector<std::size_t>{1});
  EXPECT_EQ(self->cost, 0.0);

  const auto forced = shortest_path(g, 0, 2);
  ASSERT_TRUE(forced);
  EXPECT_EQ(forced->nodes, (std::vector<std::size_t>{0, 1, 2}));

  const std::vector<Vec2> split{{0, 0}, {2000, 0}};
  EXPECT_FALSE(shortest_path(build_adjacency(split, p), 0, 1));
  EXPECT_THROW(shortest_path(g, 0, 3), ValidationError);
}

TEST(ShortestPath, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> nodes(2, 8);
  const CommParams p;
  for (int trial = 0; trial < 200; ++trial) {
    const CommGraph g = build_adjacency(random_positions(rng, nodes(rng), 1000), p);
    const auto w = weight_matrix(g);
    for (std::size_t s = 0; s < g.node_count(); ++s) {
      for (std::size_t t = 0; t < g.node_count(); ++t) {
        const auto route = shortest_path(g, s, t);
        const auto best = oracle::min_simple_path(w, s, t);
        ASSERT_EQ(route.has_value(), best.has_value());
        if (route) EXPECT_EQ(route->cost, *best);
      }
    }
  }
}

TEST(ShortestPath, AddingRelayNeverHurts) {
  std::mt19937_64 rng(77);
  const CommParams p;
  for (int trial = 0; trial < 100; ++trial) {
    auto pos = random_positions(rng, 6, 1200);
    const CommGraph before = build_adjacency(pos, p);
    pos.push_back(random_positions(rng, 1, 1200)[0]);
    const CommGraph after = build_adjacency(pos, p);
    for (std::size_t s = 0; s < 6; ++s) {
      for (std::size_t t = 0; t < 6; ++t) {
        const auto r0 = shortest_path(before, s, t);
        const auto r1 = shortest_path(after, s, t);
        if (r0) {
          ASSERT_TRUE(r1);
          EXPECT_LE(r1->cost, r0->cost);
        }
      }
    }
  }
}

TEST(TransmissionTime, SingleLinkAndEqualLinks) {
  const CommParams p;
  const std::vector<Vec2> pair{{0, 0}, {300, 0}};
  const double one = transmission_time(pair, p, 1, 0);
  EXPECT_NEAR(one, std::ceil(8e6 / 1024) * 1024 / shannon_rate(p, 300), 1e-9);

  // Three 300 m links where skipping a relay is out of range.
  const std::vector<Vec2> chain{{0, 0}, {300, 0}, {600, 0}, {900, 0}};
  EXPECT_NEAR(transmission_time(chain, p, 3, 0), 3 * one, 1e-9);

  const std::vector<Vec2> split{{0, 0}, {3000, 0}};
  EXPECT_THROW(transmission_time(split, p, 1, 0), DisconnectedError);
}

TEST(ItemizedBudget, TermsSumToReceivedPower) {
  const CommParams p;
  const auto lines = itemized_budget(p);
  double sum = 0;
  double received = 0;
  for (const auto& l : lines) {
    if (l.term == "received_power") {
      received = l.value;
      break;
    }
    sum += l.value;
  }
  EXPECT_NEAR(sum, received, 1e-9);
  EXPECT_NEAR(received, p.rx_sensitivity_dbm, 1e-9);
}
