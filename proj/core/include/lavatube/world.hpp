#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lavatube/geometry.hpp"

namespace lavatube {

enum class CellState : std::uint8_t { Unexplored, ExploredFree, Obstacle };

/// Neighbourhood used to decide whether an explored cell borders unexplored space.
enum class Adjacency : std::uint8_t { Four, Eight };

/// Rectangular tube section [0, length] x [0, width] with circular obstacles.
/// The tube axis runs along x.
struct EnvironmentSpec {
  double length = 50.0;
  double width = 8.0;
  int resolution = 100;  // cells per world unit
  std::vector<Circle> obstacles;

  bool operator==(const EnvironmentSpec&) const = default;
};

/// Throws ValidationError when dimensions, resolution or obstacle layout are invalid.
void validate(const EnvironmentSpec& spec);

struct CellIndex {
  int ix = 0;
  int iy = 0;

  bool operator==(const CellIndex&) const = default;
};

/// Discretized tube world.
///
/// A cell's state is decided by its center point. Points map to cells by
/// floor(coordinate * resolution); points on the far edges of the closed
/// rectangle belong to the last row/column.
///
/// Obstacle cells are OBSTACLE from construction; robots only learn about an
/// obstacle once a sensing sweep reveals it (see mark_explored).
class Environment {
 public:
  explicit Environment(EnvironmentSpec spec);

  const EnvironmentSpec& spec() const { return spec_; }
  int cols() const { return cols_; }
  int rows() const { return rows_; }
  std::size_t cell_count() const { return cells_.size(); }
  double cell_size() const { return 1.0 / spec_.resolution; }

  CellState state(CellIndex c) const { return cells_[flat(c)]; }
  /// True once an obstacle cell has fallen inside some sensing disk.
  bool obstacle_cell_sensed(CellIndex c) const { return sensed_[flat(c)] != 0; }
  Vec2 cell_center(CellIndex c) const;
  bool contains(Vec2 p) const;
  std::optional<CellIndex> cell_of(Vec2 p) const;

  /// Marks every non-obstacle cell whose center is within `radius` of
  /// `center` as explored and reveals nearby obstacles. Returns the number of
  /// cells that changed from UNEXPLORED to EXPLORED_FREE.
  ///
  /// An obstacle disk is revealed when it comes within radius plus half a
  /// cell diagonal of the sensing center, so any point of an explored cell
  /// that lies inside an obstacle belongs to a revealed obstacle.
  std::size_t mark_explored(Vec2 center, double radius);

  /// Centers of explored free cells with at least one UNEXPLORED neighbour,
  /// in row-major order (y outer, x inner).
  std::vector<Vec2> free_boundary(Adjacency adjacency = Adjacency::Four) const;

  bool point_in_explored(Vec2 p) const;
  double coverage_fraction() const;

  std::size_t explored_count() const { return explored_; }
  std::size_t free_cell_count() const { return free_cells_; }

  bool obstacle_revealed(std::size_t i) const { return revealed_[i] != 0; }
  std::vector<Circle> revealed_obstacles() const;
  /// Ground truth; planners must use revealed_obstacles().
  bool inside_any_obstacle(Vec2 p) const;

 private:
  std::size_t flat(CellIndex c) const {
    return static_cast<std::size_t>(c.iy) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c.ix);
  }

  EnvironmentSpec spec_;
  int cols_ = 0;
  int rows_ = 0;
  std::vector<CellState> cells_;
  std::vector<std::uint8_t> sensed_;
  std::vector<std::uint8_t> revealed_;
  std::size_t free_cells_ = 0;
  std::size_t explored_ = 0;
  // Bounding box of explored cells; empty while explored_ == 0.
  int min_ix_ = 0, max_ix_ = -1, min_iy_ = 0, max_iy_ = -1;
};

Environment build_environment(const EnvironmentSpec& spec);

/// True iff the closed segment a-b comes within radius of any obstacle center.
/// Throws ValidationError when a == b.
bool segment_intersects_obstacle(Vec2 a, Vec2 b, std::span<const Circle> obstacles);

}  // namespace lavatube
