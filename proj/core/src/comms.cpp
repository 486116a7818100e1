#include "lavatube/comms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "lavatube/error.hpp"

namespace lavatube::comms {

void validate(const CommParams& p) {
  detail::require_positive(p.frequency_hz, "frequency");
  detail::require_positive(p.bandwidth_hz, "bandwidth");
  detail::require_positive(p.noise_temperature_k, "noise temperature");
  detail::require_positive(p.packet_size_bits, "packet size");
  detail::require(p.data_size_bits >= 0.0, "data size must be non-negative");
}

double free_space_path_loss(double distance_m, double frequency_hz) {
  detail::require_positive(distance_m, "distance");
  detail::require_positive(frequency_hz, "frequency");
  return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * frequency_hz / kSpeedOfLight);
}

namespace {

// Everything in the budget except the distance-dependent path loss.
double budget_before_path_loss(const CommParams& p) {
  return p.tx_power_dbm + p.antenna_gain_db - p.fixed_losses_db - p.excess_loss_db;
}

}  // namespace

double received_power(const CommParams& p, double distance_m) {
  return budget_before_path_loss(p) - free_space_path_loss(distance_m, p.frequency_hz);
}

double max_range(const CommParams& p) {
  detail::require_positive(p.frequency_hz, "frequency");
  const double allowed_path_loss = budget_before_path_loss(p) - p.rx_sensitivity_dbm;
  if (!(allowed_path_loss > 0.0)) {
    throw ValidationError("link budget does not close: allowed path loss " +
                          std::to_string(allowed_path_loss) + " dB");
  }
  return kSpeedOfLight / (4.0 * std::numbers::pi * p.frequency_hz) *
         std::pow(10.0, allowed_path_loss / 20.0);
}

double noise_floor_dbm(const CommParams& p) {
  return 10.0 * std::log10(kBoltzmann * p.noise_temperature_k * p.bandwidth_hz * 1000.0);
}

double snr_db(const CommParams& p, double distance_m) {
  return received_power(p, distance_m) - p.pointing_loss_db - noise_floor_dbm(p);
}

double shannon_rate(const CommParams& p, double distance_m) {
  const double snr = std::pow(10.0, snr_db(p, distance_m) / 10.0);
  return p.bandwidth_hz * std::log2(1.0 + snr);
}

double ebno_at_capacity_db(const CommParams& p, double distance_m) {
  const double snr = std::pow(10.0, snr_db(p, distance_m) / 10.0);
  return 10.0 * std::log10(snr / std::log2(1.0 + snr));
}

bool link_usable(const CommParams& p, double distance_m) {
  return received_power(p, distance_m) >= p.rx_sensitivity_dbm &&
         ebno_at_capacity_db(p, distance_m) >= p.min_ebno_db;
}

double padded_message_bits(const CommParams& p) {
  return std::ceil(p.data_size_bits / p.packet_size_bits) * p.packet_size_bits;
}

double link_transmission_time(const CommParams& p, double distance_m) {
  return padded_message_bits(p) / shannon_rate(p, distance_m);
}

CommGraph::CommGraph(std::vector<Vec2> positions, std::vector<Edge> edges)
    : positions_(std::move(positions)), edges_(std::move(edges)), adjacency_(positions_.size()) {
  for (const Edge& e : edges_) {
    detail::require(e.a < positions_.size() && e.b < positions_.size() && e.a != e.b,
                    "edge references an invalid node");
    adjacency_[e.a].push_back({e.b, e.cost});
    adjacency_[e.b].push_back({e.a, e.cost});
  }
}

std::optional<double> CommGraph::edge_cost(std::size_t a, std::size_t b) const {
  if (a >= adjacency_.size()) return std::nullopt;
  for (const Neighbor& n : adjacency_[a]) {
    if (n.node == b) return n.cost;
  }
  return std::nullopt;
}

CommGraph build_adjacency(std::span<const Vec2> positions, const CommParams& p) {
  validate(p);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < positions.size(); ++a) {
    for (std::size_t b = a + 1; b < positions.size(); ++b) {
      const double d = distance(positions[a], positions[b]);
      // Co-located nodes are treated as linked at negligible distance.
      const double link_d = std::max(d, 1e-9);
      if (!link_usable(p, link_d)) continue;
      edges.push_back({a, b, d, received_power(p, link_d), link_transmission_time(p, link_d)});
    }
  }
  return CommGraph({positions.begin(), positions.end()}, std::move(edges));
}

std::optional<Route> shortest_path(const CommGraph& graph, std::size_t src, std::size_t dst) {
  const std::size_t n = graph.node_count();
  detail::require(src < n && dst < n, "unknown node id");

  constexpr double inf = std::numeric_limits<double>::infinity();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<double> dist(n, inf);
  std::vector<std::size_t> prev(n, none);
  std::vector<bool> done(n, false);

  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  dist[src] = 0.0;
  open.push({0.0, src});
  while (!open.empty()) {
    const auto [d, u] = open.top();
    open.pop();
    if (done[u]) continue;
    done[u] = true;
    if (u == dst) break;
    for (const auto& nb : graph.neighbors(u)) {
      const double cand = d + nb.cost;
      if (cand < dist[nb.node]) {
        dist[nb.node] = cand;
        prev[nb.node] = u;
        open.push({cand, nb.node});
      }
    }
  }
  if (dist[dst] == inf) return std::nullopt;

  Route r;
  r.cost = dist[dst];
  for (std::size_t v = dst; v != none; v = prev[v]) r.nodes.push_back(v);
  std::reverse(r.nodes.begin(), r.nodes.end());
  return r;
}

double transmission_time(std::span<const Vec2> positions, const CommParams& p, std::size_t src,
                         std::size_t dst) {
  const CommGraph g = build_adjacency(positions, p);
  const auto route = shortest_path(g, src, dst);
  if (!route) {
    throw DisconnectedError("no relay route from node " + std::to_string(src) + " to node " +
                            std::to_string(dst));
  }
  return route->cost;
}

std::vector<BudgetLine> itemized_budget(const CommParams& p) {
  const double range = max_range(p);
  const double fspl = free_space_path_loss(range, p.frequency_hz);
  return {
      {"transmit_power", p.tx_power_dbm, "dBm"},
      {"antenna_gain", p.antenna_gain_db, "dB"},
      {"fixed_losses", -p.fixed_losses_db, "dB"},
      {"excess_losses", -p.excess_loss_db, "dB"},
      {"free_space_path_loss", -fspl, "dB"},
      {"received_power", received_power(p, range), "dBm"},
      {"receiver_sensitivity", p.rx_sensitivity_dbm, "dBm"},
      {"max_range", range, "m"},
  };
}

}  // namespace lavatube::comms
