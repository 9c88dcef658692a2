#ifndef TRACKRECT_TRAJECTORY_HPP
#define TRACKRECT_TRAJECTORY_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace trackrect {

/// The queried point: the frame it was sampled at and its position there,
/// in the video's pixel space.
struct QueryPoint {
  int frame = 0;
  double x = 0.0;
  double y = 0.0;

  bool operator==(const QueryPoint&) const = default;
};

/// One predicted (or annotated) position, one per frame.
struct TrackPoint {
  int frame = 0;
  double x = 0.0;
  double y = 0.0;
  bool visible = true;

  bool operator==(const TrackPoint&) const = default;
};

/// A query point and its per-frame track covering every frame of the video.
struct Trajectory {
  QueryPoint query;
  std::vector<TrackPoint> points;

  bool operator==(const Trajectory&) const = default;
};

/// On-disk trajectory set; the same schema serves predictions and ground
/// truth. camera_moving is optional metadata used for group splits.
struct TrajectoryFile {
  std::string video_id;
  int width = 0;
  int height = 0;
  int num_frames = 0;
  std::vector<Trajectory> points;
  std::optional<bool> camera_moving;

  bool operator==(const TrajectoryFile&) const = default;
};

/// Parse and validate a trajectory JSON file:
///   {"video_id": str, "resolution": [w, h], "num_frames": n,
///    "points": [{"query": {"frame": t, "x": f, "y": f},
///                "track": [{"frame": t, "x": f, "y": f, "visible": b}, ...]}]}
/// Every track must cover frames 0..n-1 in order and the query position must
/// lie within the resolution bounds. Throws InputError on schema violations.
TrajectoryFile load_trajectories(const std::filesystem::path& path);

/// Serialize with the same schema; a byte-deterministic writer (save twice,
/// get identical files).
void save_trajectories(const std::filesystem::path& path, const TrajectoryFile& trajectories);

}  // namespace trackrect

#endif
