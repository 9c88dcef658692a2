#include "trackrect/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "trackrect/errors.hpp"

namespace trackrect {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Deterministic white-noise texture over unbounded world coordinates.
std::uint8_t texture_value(std::uint64_t seed, std::int64_t wx, std::int64_t wy) {
  const std::uint64_t h =
      splitmix64(splitmix64(seed ^ static_cast<std::uint64_t>(wx) * 0xC2B2AE3D27D4EB4FULL) ^
                 static_cast<std::uint64_t>(wy) * 0x165667B19E3779F9ULL);
  return static_cast<std::uint8_t>(h & 0xFF);
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

Vec2 object_center(const ObjectSpec& obj, int frame) {
  const double t = static_cast<double>(frame);
  if (obj.path == PathKind::linear)
    return {obj.start_x + obj.vel_x * t, obj.start_y + obj.vel_y * t};
  const double phase = 2.0 * std::numbers::pi * t / obj.period;
  return {obj.start_x + obj.amp_x * std::sin(phase), obj.start_y + obj.amp_y * std::sin(phase)};
}

bool inside_object(const ObjectSpec& obj, Vec2 center, double wx, double wy) {
  if (obj.shape == ObjectShape::rectangle)
    return std::abs(wx - center.x) <= obj.size_x / 2.0 &&
           std::abs(wy - center.y) <= obj.size_y / 2.0;
  const double r = obj.size_x / 2.0;
  const double dx = wx - center.x, dy = wy - center.y;
  return dx * dx + dy * dy <= r * r;
}

std::uint8_t clamp_pixel(double v) {
  const long r = std::lround(v);
  if (r < 0) return 0;
  if (r > 255) return 255;
  return static_cast<std::uint8_t>(r);
}

void validate(const SceneSpec& scene) {
  if (scene.num_frames < 1) throw InputError("scene: num_frames must be >= 1");
  if (!(scene.fps > 0.0)) throw InputError("scene: fps must be > 0");
  if (scene.bg_noise_sigma < 0.0) throw InputError("scene: noise sigma must be >= 0");
  for (const ObjectSpec& obj : scene.objects) {
    if (obj.size_x <= 0.0 || obj.size_y <= 0.0) throw InputError("scene: object size must be > 0");
    if (obj.path == PathKind::sinusoidal && !(obj.period > 0.0))
      throw InputError("scene: sinusoidal path needs a positive period");
  }
  const bool static_camera = scene.pan_dx == 0.0 && scene.pan_dy == 0.0;
  if (static_camera) {
    for (const ObjectSpec& obj : scene.objects) {
      for (int t = 0; t < scene.num_frames; ++t) {
        const Vec2 c = object_center(obj, t);
        if (c.x - obj.size_x / 2.0 < 0.0 || c.x + obj.size_x / 2.0 > scene.width - 1 ||
            c.y - obj.size_y / 2.0 < 0.0 || c.y + obj.size_y / 2.0 > scene.height - 1)
          throw InputError("scene: object escapes frame at frame " + std::to_string(t));
      }
    }
  }
}

}  // namespace

RenderResult render(const SceneSpec& scene) {
  validate(scene);

  RenderResult result;
  result.camera_label = (scene.pan_dx != 0.0 || scene.pan_dy != 0.0) ? 1 : 0;
  result.video.fps = scene.fps;
  result.video.video_id = scene.video_id;
  result.video.frames.reserve(scene.num_frames);

  std::vector<std::vector<Vec2>> centers(scene.objects.size());
  for (std::size_t k = 0; k < scene.objects.size(); ++k) {
    centers[k].reserve(scene.num_frames);
    for (int t = 0; t < scene.num_frames; ++t)
      centers[k].push_back(object_center(scene.objects[k], t));
  }

  std::mt19937_64 noise_rng(splitmix64(scene.seed ^ 0x6e6f697365ULL));
  std::normal_distribution<double> noise(0.0, scene.bg_noise_sigma);

  for (int t = 0; t < scene.num_frames; ++t) {
    const double cam_x = scene.pan_dx * t;
    const double cam_y = scene.pan_dy * t;
    GrayFrame frame(scene.width, scene.height);
    for (int py = 0; py < scene.height; ++py) {
      for (int px = 0; px < scene.width; ++px) {
        const double wx = px + cam_x;
        const double wy = py + cam_y;
        double base = scene.textured_bg
                          ? texture_value(scene.seed, std::llround(wx), std::llround(wy))
                          : scene.bg_level;
        for (std::size_t k = 0; k < scene.objects.size(); ++k)
          if (inside_object(scene.objects[k], centers[k][t], wx, wy))
            base = scene.objects[k].intensity;
        if (scene.bg_noise_sigma > 0.0) base += noise(noise_rng);
        frame.at(px, py) = clamp_pixel(base);
      }
    }
    result.video.frames.push_back(std::move(frame));
  }

  // Ground truth. Object surface points ride their object; background points
  // are fixed world positions, occluded while covered.
  TrajectoryFile& gt = result.gt;
  gt.video_id = scene.video_id;
  gt.width = scene.width;
  gt.height = scene.height;
  gt.num_frames = scene.num_frames;
  gt.camera_moving = result.camera_label == 1;

  auto in_bounds = [&](double x, double y) {
    return x >= 0.0 && x < scene.width && y >= 0.0 && y < scene.height;
  };

  std::mt19937_64 point_rng(splitmix64(scene.seed ^ 0x706f696e7473ULL));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (std::size_t k = 0; k < scene.objects.size(); ++k) {
    const ObjectSpec& obj = scene.objects[k];
    for (int s = 0; s < obj.surface_points; ++s) {
      // offsets confined to the object's inner half so the point stays well
      // inside the contour
      Vec2 offset;
      do {
        offset.x = (unit(point_rng) - 0.5) * obj.size_x / 2.0;
        offset.y = (unit(point_rng) - 0.5) * obj.size_y / 2.0;
      } while (obj.shape == ObjectShape::disk &&
               offset.x * offset.x + offset.y * offset.y >
                   (obj.size_x / 4.0) * (obj.size_x / 4.0));

      Trajectory traj;
      for (int t = 0; t < scene.num_frames; ++t) {
        const double x = centers[k][t].x + offset.x - scene.pan_dx * t;
        const double y = centers[k][t].y + offset.y - scene.pan_dy * t;
        traj.points.push_back({t, x, y, in_bounds(x, y)});
      }
      traj.query = {0, traj.points[0].x, traj.points[0].y};
      gt.points.push_back(std::move(traj));
    }
  }

  for (int s = 0; s < scene.background_points; ++s) {
    // world-fixed point, rejected off the frame-0 object footprints
    Vec2 world;
    bool clear = true;
    do {
      world.x = unit(point_rng) * (scene.width - 1);
      world.y = unit(point_rng) * (scene.height - 1);
      clear = true;
      for (std::size_t k = 0; k < scene.objects.size(); ++k)
        if (inside_object(scene.objects[k], centers[k][0], world.x, world.y)) clear = false;
    } while (!clear);

    Trajectory traj;
    for (int t = 0; t < scene.num_frames; ++t) {
      const double x = world.x - scene.pan_dx * t;
      const double y = world.y - scene.pan_dy * t;
      bool visible = in_bounds(x, y);
      for (std::size_t k = 0; k < scene.objects.size() && visible; ++k)
        if (inside_object(scene.objects[k], centers[k][t], world.x, world.y)) visible = false;
      traj.points.push_back({t, x, y, visible});
    }
    traj.query = {0, traj.points[0].x, traj.points[0].y};
    gt.points.push_back(std::move(traj));
  }

  return result;
}

TrajectoryFile degrade(const TrajectoryFile& gt, const DegradationSpec& spec) {
  if (spec.jitter_sigma < 0.0) throw InputError("degradation: jitter sigma must be >= 0");
  if (spec.pseudo_follow < 0.0 || spec.pseudo_follow > 1.0)
    throw InputError("degradation: pseudo_follow must lie in [0,1]");

  TrajectoryFile out = gt;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    Trajectory& traj = out.points[i];
    const Trajectory& truth = gt.points[i];

    std::mt19937_64 rng(splitmix64(spec.seed ^ (0x64656772ULL + i * 0x9E3779B97F4A7C15ULL)));
    std::normal_distribution<double> jitter(0.0, spec.jitter_sigma);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    bool is_static = true;
    for (const TrackPoint& pt : truth.points)
      if (pt.x != truth.points[0].x || pt.y != truth.points[0].y) is_static = false;

    int occlusion_frame = -1;
    for (const TrackPoint& pt : truth.points)
      if (!pt.visible) {
        occlusion_frame = pt.frame;
        break;
      }

    const bool follows = is_static && occlusion_frame >= 0 &&
                         spec.pseudo_follow > 0.0 && unit(rng) < spec.pseudo_follow;

    for (TrackPoint& pt : traj.points) {
      double x = pt.x, y = pt.y;
      if (follows && pt.frame >= occlusion_frame) {
        x = truth.points[occlusion_frame].x + spec.drag_dx * (pt.frame - occlusion_frame);
        y = truth.points[occlusion_frame].y + spec.drag_dy * (pt.frame - occlusion_frame);
      }
      if (spec.jitter_sigma > 0.0) {
        x += jitter(rng);
        y += jitter(rng);
      }
      pt.x = x;
      pt.y = y;
    }
  }
  return out;
}

}  // namespace trackrect
