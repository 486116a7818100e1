#include "lavatube/world.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lavatube/error.hpp"

namespace lavatube {
namespace {

int grid_extent(double extent, int resolution, const char* name) {
  const double cells = extent * resolution;
  const double rounded = std::round(cells);
  if (rounded < 1.0 || std::abs(cells - rounded) > 1e-6) {
    throw ValidationError(std::string(name) + " * resolution must be a positive whole number of cells");
  }
  return static_cast<int>(rounded);
}

}  // namespace

void validate(const EnvironmentSpec& spec) {
  detail::require_positive(spec.length, "length");
  detail::require_positive(spec.width, "width");
  detail::require(spec.resolution >= 1, "resolution must be >= 1");
  grid_extent(spec.length, spec.resolution, "length");
  grid_extent(spec.width, spec.resolution, "width");

  const auto& obs = spec.obstacles;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    const Circle& c = obs[i];
    const std::string tag = "obstacle " + std::to_string(i);
    detail::require(c.radius > 0.0, tag + ": radius must be positive");
    detail::require(c.center.x - c.radius >= 0.0 && c.center.x + c.radius <= spec.length &&
                        c.center.y - c.radius >= 0.0 && c.center.y + c.radius <= spec.width,
                    tag + ": disk leaves the environment rectangle");
    for (std::size_t j = 0; j < i; ++j) {
      detail::require(distance(c.center, obs[j].center) >= c.radius + obs[j].radius,
                      tag + " overlaps obstacle " + std::to_string(j));
    }
  }
}

Environment::Environment(EnvironmentSpec spec) : spec_(std::move(spec)) {
  validate(spec_);
  cols_ = grid_extent(spec_.length, spec_.resolution, "length");
  rows_ = grid_extent(spec_.width, spec_.resolution, "width");
  const auto n = static_cast<std::size_t>(cols_) * static_cast<std::size_t>(rows_);
  cells_.assign(n, CellState::Unexplored);
  sensed_.assign(n, 0);
  revealed_.assign(spec_.obstacles.size(), 0);

  const double h = cell_size();
  for (const Circle& o : spec_.obstacles) {
    const int x0 = std::max(0, static_cast<int>(std::floor((o.center.x - o.radius) / h)));
    const int x1 = std::min(cols_ - 1, static_cast<int>(std::floor((o.center.x + o.radius) / h)));
    const int y0 = std::max(0, static_cast<int>(std::floor((o.center.y - o.radius) / h)));
    const int y1 = std::min(rows_ - 1, static_cast<int>(std::floor((o.center.y + o.radius) / h)));
    for (int iy = y0; iy <= y1; ++iy) {
      for (int ix = x0; ix <= x1; ++ix) {
        if (distance(cell_center({ix, iy}), o.center) <= o.radius) {
          cells_[flat({ix, iy})] = CellState::Obstacle;
        }
      }
    }
  }
  free_cells_ = static_cast<std::size_t>(
      std::count(cells_.begin(), cells_.end(), CellState::Unexplored));
}

Vec2 Environment::cell_center(CellIndex c) const {
  const double h = cell_size();
  return {(c.ix + 0.5) * h, (c.iy + 0.5) * h};
}

bool Environment::contains(Vec2 p) const {
  return p.x >= 0.0 && p.x <= spec_.length && p.y >= 0.0 && p.y <= spec_.width;
}

std::optional<CellIndex> Environment::cell_of(Vec2 p) const {
  if (!contains(p)) return std::nullopt;
  const int ix = std::min(cols_ - 1, static_cast<int>(std::floor(p.x * spec_.resolution)));
  const int iy = std::min(rows_ - 1, static_cast<int>(std::floor(p.y * spec_.resolution)));
  return CellIndex{ix, iy};
}

std::size_t Environment::mark_explored(Vec2 center, double radius) {
  detail::require_positive(radius, "sensing radius");
  detail::require(contains(center), "sensing center outside the environment");

  const double h = cell_size();
  const int x0 = std::max(0, static_cast<int>(std::floor((center.x - radius) / h)));
  const int x1 = std::min(cols_ - 1, static_cast<int>(std::floor((center.x + radius) / h)));
  const int y0 = std::max(0, static_cast<int>(std::floor((center.y - radius) / h)));
  const int y1 = std::min(rows_ - 1, static_cast<int>(std::floor((center.y + radius) / h)));

  std::size_t fresh = 0;
  const double r2 = radius * radius;
  for (int iy = y0; iy <= y1; ++iy) {
    const double dy = (iy + 0.5) * h - center.y;
    for (int ix = x0; ix <= x1; ++ix) {
      const double dx = (ix + 0.5) * h - center.x;
      if (dx * dx + dy * dy > r2) continue;
      const std::size_t k = flat({ix, iy});
      switch (cells_[k]) {
        case CellState::Unexplored:
          cells_[k] = CellState::ExploredFree;
          ++fresh;
          min_ix_ = explored_ == 0 ? ix : std::min(min_ix_, ix);
          max_ix_ = explored_ == 0 ? ix : std::max(max_ix_, ix);
          min_iy_ = explored_ == 0 ? iy : std::min(min_iy_, iy);
          max_iy_ = explored_ == 0 ? iy : std::max(max_iy_, iy);
          ++explored_;
          break;
        case CellState::Obstacle:
          sensed_[k] = 1;
          break;
        case CellState::ExploredFree:
          break;
      }
    }
  }

  const double margin = 0.5 * std::sqrt(2.0) * h;
  for (std::size_t i = 0; i < spec_.obstacles.size(); ++i) {
    const Circle& o = spec_.obstacles[i];
    if (distance(center, o.center) <= radius + o.radius + margin) revealed_[i] = 1;
  }
  return fresh;
}

std::vector<Vec2> Environment::free_boundary(Adjacency adjacency) const {
  std::vector<Vec2> out;
  if (explored_ == 0) return out;

  auto unexplored = [&](int ix, int iy) {
    return ix >= 0 && ix < cols_ && iy >= 0 && iy < rows_ &&
           cells_[flat({ix, iy})] == CellState::Unexplored;
  };
  for (int iy = min_iy_; iy <= max_iy_; ++iy) {
    for (int ix = min_ix_; ix <= max_ix_; ++ix) {
      if (cells_[flat({ix, iy})] != CellState::ExploredFree) continue;
      bool edge = unexplored(ix - 1, iy) || unexplored(ix + 1, iy) || unexplored(ix, iy - 1) ||
                  unexplored(ix, iy + 1);
      if (!edge && adjacency == Adjacency::Eight) {
        edge = unexplored(ix - 1, iy - 1) || unexplored(ix + 1, iy - 1) ||
               unexplored(ix - 1, iy + 1) || unexplored(ix + 1, iy + 1);
      }
      if (edge) out.push_back(cell_center({ix, iy}));
    }
  }
  return out;
}

bool Environment::point_in_explored(Vec2 p) const {
  const auto c = cell_of(p);
  return c && state(*c) == CellState::ExploredFree;
}

double Environment::coverage_fraction() const {
  if (free_cells_ == 0) return 0.0;
  return static_cast<double>(explored_) / static_cast<double>(free_cells_);
}

std::vector<Circle> Environment::revealed_obstacles() const {
  std::vector<Circle> out;
  for (std::size_t i = 0; i < spec_.obstacles.size(); ++i) {
    if (revealed_[i]) out.push_back(spec_.obstacles[i]);
  }
  return out;
}

bool Environment::inside_any_obstacle(Vec2 p) const {
  return std::any_of(spec_.obstacles.begin(), spec_.obstacles.end(),
                     [&](const Circle& o) { return distance(p, o.center) <= o.radius; });
}

Environment build_environment(const EnvironmentSpec& spec) { return Environment(spec); }

bool segment_intersects_obstacle(Vec2 a, Vec2 b, std::span<const Circle> obstacles) {
  detail::require(!(a == b), "degenerate segment: endpoints coincide");
  return std::any_of(obstacles.begin(), obstacles.end(), [&](const Circle& o) {
    return point_segment_distance(o.center, a, b) <= o.radius;
  });
}

}  // namespace lavatube
