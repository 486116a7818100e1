#include "lavatube/render.hpp"

#include <cstdio>
#include <sstream>

#include "lavatube/error.hpp"

namespace lavatube {
namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

const Snapshot* find_snapshot(const SnapshotLog& log, int timestep) {
  for (const Snapshot& s : log.snapshots) {
    if (s.timestep == timestep) return &s;
  }
  return nullptr;
}

}  // namespace

std::vector<Vec2> sensing_centers(const SnapshotLog& log, int timestep) {
  std::vector<Vec2> out;
  for (const Snapshot& s : log.snapshots) {
    if (s.timestep > timestep) break;
    if (s.timestep == 0) {
      for (const Pose& p : s.poses) out.push_back(p.position());
    }
    for (const HopEvent& h : s.hops) out.push_back(h.to);
  }
  return out;
}

std::string render_frame_svg(const SnapshotLog& log, int timestep, double ppu) {
  const Snapshot* snap = find_snapshot(log, timestep);
  if (!snap) throw ValidationError("timestep " + std::to_string(timestep) + " not in snapshot log");

  const double w = log.environment.length * ppu;
  const double h = log.environment.width * ppu;
  auto sx = [&](double x) { return fixed(x * ppu); };
  auto sy = [&](double y) { return fixed((log.environment.width - y) * ppu); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(w) << "\" height=\""
    << fixed(h) << "\" viewBox=\"0 0 " << fixed(w) << ' ' << fixed(h) << "\">\n";
  o << "<title>timestep " << timestep << "</title>\n";
  o << "<defs><clipPath id=\"tube\"><rect x=\"0\" y=\"0\" width=\"" << fixed(w) << "\" height=\""
    << fixed(h) << "\"/></clipPath></defs>\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << fixed(w) << "\" height=\"" << fixed(h)
    << "\" fill=\"#5b2c83\"/>\n";

  o << "<g clip-path=\"url(#tube)\" fill=\"#3cb44b\">\n";
  for (Vec2 c : sensing_centers(log, timestep)) {
    o << "<circle cx=\"" << sx(c.x) << "\" cy=\"" << sy(c.y) << "\" r=\""
      << fixed(log.vision_radius * ppu) << "\"/>\n";
  }
  o << "</g>\n";

  o << "<g fill=\"#ffe119\" stroke=\"#000000\" stroke-width=\"0.5\">\n";
  for (const Circle& c : log.environment.obstacles) {
    o << "<circle cx=\"" << sx(c.center.x) << "\" cy=\"" << sy(c.center.y) << "\" r=\""
      << fixed(c.radius * ppu) << "\"/>\n";
  }
  o << "</g>\n";

  const auto& poses = snap->poses;
  o << "<g stroke=\"#000000\" stroke-width=\"1\">\n";
  for (std::size_t a = 0; a < poses.size(); ++a) {
    for (std::size_t b = a + 1; b < poses.size(); ++b) {
      if (distance(poses[a].position(), poses[b].position()) > log.comm_range) continue;
      o << "<line x1=\"" << sx(poses[a].x) << "\" y1=\"" << sy(poses[a].y) << "\" x2=\""
        << sx(poses[b].x) << "\" y2=\"" << sy(poses[b].y) << "\"/>\n";
    }
  }
  o << "</g>\n";

  for (std::size_t i = 0; i < poses.size(); ++i) {
    const bool base = i == 0;
    o << "<circle cx=\"" << sx(poses[i].x) << "\" cy=\"" << sy(poses[i].y) << "\" r=\""
      << fixed((base ? 0.25 : 0.15) * ppu) << "\" fill=\"" << (base ? "#e6194b" : "#000000")
      << "\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace lavatube
