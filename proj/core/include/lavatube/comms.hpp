#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lavatube/geometry.hpp"

namespace lavatube::comms {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kBoltzmann = 1.380649e-23;   // J/K

/// RF parameters. Defaults reproduce the reference cave-relay radio.
struct CommParams {
  double tx_power_dbm = 25.0;
  double antenna_gain_db = 1.0;     // applied once, on the transmit side
  double rx_sensitivity_dbm = -80.0;
  double frequency_hz = 2.4e9;
  double fixed_losses_db = 12.0;    // cable 3 dB + channel 9 dB
  double excess_loss_db = 0.0;      // extra in-cave attenuation knob
  double bandwidth_hz = 20e3;
  double noise_temperature_k = 200.0;
  double pointing_loss_db = 18.0;   // rate computation only
  double min_ebno_db = 10.0;
  double packet_size_bits = 1024.0;
  double data_size_bits = 8e6;      // 1 MB

  bool operator==(const CommParams&) const = default;
};

void validate(const CommParams& p);

double free_space_path_loss(double distance_m, double frequency_hz);

/// Transmit power plus gain minus fixed losses minus FSPL.
double received_power(const CommParams& p, double distance_m);

/// Distance at which received power drops to the receiver sensitivity.
/// Throws ValidationError when the budget never closes.
double max_range(const CommParams& p);

/// Thermal noise floor kTB in dBm.
double noise_floor_dbm(const CommParams& p);

/// SNR in dB at the receiver, after pointing loss.
double snr_db(const CommParams& p, double distance_m);

/// Shannon capacity B log2(1 + SNR).
double shannon_rate(const CommParams& p, double distance_m);

/// Eb/No (dB) when signalling at the Shannon rate: SNR / log2(1 + SNR).
double ebno_at_capacity_db(const CommParams& p, double distance_m);

/// Received power closes the budget and Eb/No clears the minimum.
bool link_usable(const CommParams& p, double distance_m);

/// Bits actually sent for the message: whole packets.
double padded_message_bits(const CommParams& p);

/// Store-and-forward time for the full message over one link.
double link_transmission_time(const CommParams& p, double distance_m);

struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  double distance = 0.0;
  double received_power_dbm = 0.0;
  double cost = 0.0;  // seconds to push the message across
};

/// Undirected weighted connectivity among robots.
class CommGraph {
 public:
  CommGraph(std::vector<Vec2> positions, std::vector<Edge> edges);

  std::size_t node_count() const { return positions_.size(); }
  const std::vector<Vec2>& positions() const { return positions_; }
  const std::vector<Edge>& edges() const { return edges_; }

  struct Neighbor {
    std::size_t node;
    double cost;
  };
  std::span<const Neighbor> neighbors(std::size_t node) const { return adjacency_[node]; }
  std::optional<double> edge_cost(std::size_t a, std::size_t b) const;

 private:
  std::vector<Vec2> positions_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Positions in metres. Edges join every pair whose link is usable.
CommGraph build_adjacency(std::span<const Vec2> positions, const CommParams& p);

struct Route {
  std::vector<std::size_t> nodes;
  double cost = 0.0;
};

/// Dijkstra minimum-cost route. Throws ValidationError for unknown node ids.
std::optional<Route> shortest_path(const CommGraph& graph, std::size_t src, std::size_t dst);

/// Sum of the per-link message times along the minimum-delay relay route.
/// Throws DisconnectedError when no route exists.
double transmission_time(std::span<const Vec2> positions, const CommParams& p, std::size_t src,
                         std::size_t dst);

/// Itemized link budget at maximum range, one term per line.
struct BudgetLine {
  std::string term;
  double value;
  std::string unit;
};
std::vector<BudgetLine> itemized_budget(const CommParams& p);

}  // namespace lavatube::comms
