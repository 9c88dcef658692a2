#include "trackrect/rectify.hpp"

#include "trackrect/errors.hpp"

namespace trackrect {

const char* to_string(RectifyMode mode) {
  switch (mode) {
    case RectifyMode::passthrough: return "passthrough";
    case RectifyMode::cmd: return "cmd";
    case RectifyMode::cmr_global: return "cmr_global";
    case RectifyMode::cmr_temporary: return "cmr_temporary";
  }
  throw InternalError("unknown rectify mode");
}

RectifyMode rectify_mode_from_string(const std::string& name) {
  if (name == "passthrough") return RectifyMode::passthrough;
  if (name == "cmd") return RectifyMode::cmd;
  if (name == "cmr_global") return RectifyMode::cmr_global;
  if (name == "cmr_temporary") return RectifyMode::cmr_temporary;
  throw InputError("unknown rectify mode '" + name + "'");
}

Trajectory static_baseline(const QueryPoint& query, int num_frames) {
  if (num_frames < 1) throw InputError("static_baseline: num_frames must be >= 1");
  Trajectory traj;
  traj.query = query;
  traj.points.reserve(num_frames);
  for (int t = 0; t < num_frames; ++t) traj.points.push_back({t, query.x, query.y, true});
  return traj;
}

namespace {

void require_coverage(const Trajectory& traj, std::span<const ConfidentMovingRegion> regions) {
  if (regions.size() != traj.points.size())
    throw InputError("moving regions do not cover every frame of the trajectory");
}

// cmd replacement: baseline positions, base visibility flags.
Trajectory snap_to_query(const Trajectory& traj) {
  Trajectory out = traj;
  for (TrackPoint& pt : out.points) {
    pt.x = traj.query.x;
    pt.y = traj.query.y;
  }
  return out;
}

}  // namespace

bool is_moving_point(const Trajectory& traj, std::span<const ConfidentMovingRegion> regions) {
  require_coverage(traj, regions);
  for (std::size_t t = 0; t < traj.points.size(); ++t)
    if (point_in_region(traj.points[t].x, traj.points[t].y, regions[t])) return true;
  return false;
}

std::vector<Trajectory> rectify_video(const std::vector<Trajectory>& trajectories,
                                      const CameraMotionResult& motion,
                                      std::span<const ConfidentMovingRegion> regions,
                                      RectifyMode mode) {
  // Moving camera: the base tracker's output is the result, whatever the mode.
  if (motion.is_moving() || mode == RectifyMode::passthrough) return trajectories;

  std::vector<Trajectory> out;
  out.reserve(trajectories.size());
  for (const Trajectory& traj : trajectories) {
    switch (mode) {
      case RectifyMode::cmd:
        out.push_back(snap_to_query(traj));
        break;
      case RectifyMode::cmr_global:
        out.push_back(is_moving_point(traj, regions) ? traj : snap_to_query(traj));
        break;
      case RectifyMode::cmr_temporary: {
        require_coverage(traj, regions);
        Trajectory fixed = traj;
        for (std::size_t t = 0; t < fixed.points.size(); ++t) {
          if (!point_in_region(traj.points[t].x, traj.points[t].y, regions[t])) {
            fixed.points[t].x = traj.query.x;
            fixed.points[t].y = traj.query.y;
          }
        }
        out.push_back(std::move(fixed));
        break;
      }
      case RectifyMode::passthrough:
        out.push_back(traj);
        break;
    }
  }
  return out;
}

}  // namespace trackrect
