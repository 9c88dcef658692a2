#ifndef TRACKRECT_SYNTHGEN_HPP
#define TRACKRECT_SYNTHGEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "trackrect/trajectory.hpp"
#include "trackrect/video_io.hpp"

namespace trackrect {

enum class ObjectShape { rectangle, disk };
enum class PathKind { linear, sinusoidal };

/// A rigid moving object. The center starts at (start_x, start_y) in world
/// coordinates and follows either a constant-velocity path or a sinusoidal
/// offset of the given amplitude and period. size_x/size_y are the full
/// extents (diameter for disks, which use size_x).
struct ObjectSpec {
  ObjectShape shape = ObjectShape::rectangle;
  double size_x = 10.0;
  double size_y = 10.0;
  double start_x = 0.0;
  double start_y = 0.0;
  PathKind path = PathKind::linear;
  double vel_x = 0.0;
  double vel_y = 0.0;
  double amp_x = 0.0;
  double amp_y = 0.0;
  double period = 120.0;
  int intensity = 200;
  int surface_points = 0;  // ground-truth points sampled on the object
};

/// Scene description. A nonzero camera pan shifts the sampled world window by
/// (pan_dx, pan_dy) per frame; the background is either a flat level or a
/// deterministic per-pixel texture (needed for pans to be observable), plus
/// optional per-frame sensor noise. Everything is a pure function of the
/// seed.
struct SceneSpec {
  std::string video_id = "scene";
  int width = 256;
  int height = 256;
  int num_frames = 2;
  double fps = 16.0;
  double bg_level = 90.0;
  double bg_noise_sigma = 0.0;
  bool textured_bg = false;
  double pan_dx = 0.0;
  double pan_dy = 0.0;
  std::vector<ObjectSpec> objects;
  int background_points = 0;  // static ground-truth points off the objects
  std::uint64_t seed = 1;
};

struct RenderResult {
  VideoSequence video;
  TrajectoryFile gt;     // carries camera_moving metadata
  int camera_label = 0;  // 1 = moving camera
};

/// Render the scene and its exact ground-truth trajectories. Object surface
/// points ride their object; background points sit still in world space and
/// are marked occluded while covered by an object or out of frame. Throws
/// InputError if an object leaves the frame under a static camera.
RenderResult render(const SceneSpec& scene);

/// Base-tracker degradation model: i.i.d. Gaussian position jitter on every
/// point, and, with the given probability, a static point that gets occluded
/// adopts a constant per-frame drag displacement from the occlusion frame
/// onward. Visibility flags pass through untouched.
struct DegradationSpec {
  double jitter_sigma = 0.0;
  double pseudo_follow = 0.0;  // probability, applied per occluded static point
  double drag_dx = 0.0;        // displacement per frame adopted on pseudo-follow
  double drag_dy = 0.0;
  std::uint64_t seed = 1;
};

TrajectoryFile degrade(const TrajectoryFile& gt, const DegradationSpec& spec);

}  // namespace trackrect

#endif
