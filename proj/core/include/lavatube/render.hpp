#pragma once

#include <string>
#include <vector>

#include "lavatube/snapshot_io.hpp"

namespace lavatube {

/// Points every robot has sensed from up to and including `timestep`:
/// initial poses plus every hop landing point.
std::vector<Vec2> sensing_centers(const SnapshotLog& log, int timestep);

/// Static SVG of one timestep. Unexplored space is purple, explored space
/// green, obstacles yellow, explorers black with black comm links, base red.
/// Throws ValidationError when the timestep is not in the log.
std::string render_frame_svg(const SnapshotLog& log, int timestep, double pixels_per_unit = 20.0);

}  // namespace lavatube
