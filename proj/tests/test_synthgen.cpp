#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "trackrect/errors.hpp"
#include "trackrect/synthgen.hpp"

using namespace trackrect;

TEST_SUITE("synthgen") {

TEST_CASE("static scene without noise renders identical frames and static truth") {
  SceneSpec scene;
  scene.width = 32;
  scene.height = 24;
  scene.num_frames = 6;
  scene.bg_level = 80.0;
  scene.background_points = 5;
  scene.seed = 5;

  const RenderResult r = render(scene);
  CHECK(r.camera_label == 0);
  REQUIRE(r.gt.camera_moving.has_value());
  CHECK_FALSE(*r.gt.camera_moving);
  for (int t = 1; t < scene.num_frames; ++t) CHECK(r.video.frames[t] == r.video.frames[0]);
  REQUIRE(r.gt.points.size() == 5);
  for (const Trajectory& traj : r.gt.points)
    for (const TrackPoint& pt : traj.points) {
      CHECK(pt.x == traj.points[0].x);
      CHECK(pt.y == traj.points[0].y);
      CHECK(pt.visible);
    }
}

TEST_CASE("panning a textured world shifts frames and ground truth") {
  SceneSpec scene;
  scene.width = 48;
  scene.height = 32;
  scene.num_frames = 5;
  scene.textured_bg = true;
  scene.pan_dx = 1.0;
  scene.pan_dy = 0.0;
  scene.background_points = 4;
  scene.seed = 9;

  const RenderResult r = render(scene);
  CHECK(r.camera_label == 1);
  CHECK(*r.gt.camera_moving);
  // frame t at x equals frame 0 at x+t (pure integer pan of a static world)
  for (int t = 1; t < scene.num_frames; ++t)
    for (int y = 0; y < scene.height; ++y)
      for (int x = 0; x + t < scene.width; ++x)
        CHECK(r.video.frames[t].at(x, y) == r.video.frames[0].at(x + t, y));
  // every ground-truth point translates by (-1, 0) per frame
  for (const Trajectory& traj : r.gt.points)
    for (int t = 0; t < scene.num_frames; ++t) {
      CHECK(traj.points[t].x == doctest::Approx(traj.points[0].x - t).epsilon(1e-12));
      CHECK(traj.points[t].y == doctest::Approx(traj.points[0].y).epsilon(1e-12));
    }
}

TEST_CASE("object surface points ride the object") {
  SceneSpec scene;
  scene.width = 64;
  scene.height = 48;
  scene.num_frames = 8;
  scene.seed = 13;
  ObjectSpec obj;
  obj.size_x = 10.0;
  obj.size_y = 10.0;
  obj.start_x = 12.0;
  obj.start_y = 24.0;
  obj.vel_x = 2.0;
  obj.vel_y = 0.0;
  obj.surface_points = 3;
  scene.objects.push_back(obj);

  const RenderResult r = render(scene);
  REQUIRE(r.gt.points.size() == 3);
  for (const Trajectory& traj : r.gt.points)
    for (int t = 0; t < scene.num_frames; ++t) {
      CHECK(traj.points[t].x == doctest::Approx(traj.points[0].x + 2.0 * t).epsilon(1e-12));
      CHECK(traj.points[t].y == doctest::Approx(traj.points[0].y).epsilon(1e-12));
      CHECK(traj.points[t].visible);
    }

  // the object actually appears in the frames at its analytic position
  const GrayFrame& f0 = r.video.frames[0];
  CHECK(f0.at(12, 24) == 200);
  CHECK(f0.at(12 + 2 * 7, 24) != 200);
  const GrayFrame& f7 = r.video.frames[7];
  CHECK(f7.at(12 + 2 * 7, 24) == 200);
}

TEST_CASE("background points are occluded while an object passes over them") {
  SceneSpec scene;
  scene.width = 40;
  scene.height = 20;
  scene.num_frames = 10;
  scene.seed = 17;
  ObjectSpec obj;
  obj.size_x = 6.0;
  obj.size_y = 19.0;  // tall bar sweeping right, y span safe (centered)
  obj.start_x = 4.0;
  obj.start_y = 9.5;
  obj.vel_x = 3.0;
  scene.objects.push_back(obj);
  scene.background_points = 10;

  const RenderResult r = render(scene);
  int occlusions = 0;
  for (const Trajectory& traj : r.gt.points) {
    bool was_occluded = false;
    for (const TrackPoint& pt : traj.points) {
      const double cx = 4.0 + 3.0 * pt.frame;
      const bool covered = std::abs(pt.x - cx) <= 3.0 && std::abs(pt.y - 9.5) <= 9.5;
      CHECK(pt.visible == !covered);
      was_occluded |= covered;
    }
    occlusions += was_occluded;
  }
  CHECK(occlusions > 0);  // the bar sweeps most of the frame
}

TEST_CASE("objects may not escape a static-camera frame") {
  SceneSpec scene;
  scene.width = 32;
  scene.height = 32;
  scene.num_frames = 30;
  ObjectSpec obj;
  obj.size_x = 8.0;
  obj.size_y = 8.0;
  obj.start_x = 16.0;
  obj.start_y = 16.0;
  obj.vel_x = 2.0;  // exits right after ~6 frames
  scene.objects.push_back(obj);
  CHECK_THROWS_AS(render(scene), InputError);
}

TEST_CASE("degradation with zero parameters is the identity") {
  SceneSpec scene;
  scene.width = 32;
  scene.height = 32;
  scene.num_frames = 5;
  scene.background_points = 4;
  scene.seed = 19;
  const RenderResult r = render(scene);
  CHECK(degrade(r.gt, {}) == r.gt);
}

TEST_CASE("jitter sigma is reproduced by the sample statistics") {
  SceneSpec scene;
  scene.width = 64;
  scene.height = 64;
  scene.num_frames = 60;
  scene.background_points = 20;
  scene.seed = 23;
  const RenderResult r = render(scene);

  DegradationSpec spec;
  spec.jitter_sigma = 2.0;
  spec.seed = 29;
  const TrajectoryFile degraded = degrade(r.gt, spec);

  double sum = 0.0, sum_sq = 0.0;
  long n = 0;
  for (std::size_t i = 0; i < degraded.points.size(); ++i)
    for (int t = 0; t < degraded.num_frames; ++t) {
      const double dx = degraded.points[i].points[t].x - r.gt.points[i].points[t].x;
      const double dy = degraded.points[i].points[t].y - r.gt.points[i].points[t].y;
      sum += dx + dy;
      sum_sq += dx * dx + dy * dy;
      n += 2;
    }
  REQUIRE(n >= 1000);
  const double mean = sum / n;
  const double stddev = std::sqrt(sum_sq / n - mean * mean);
  CHECK(stddev == doctest::Approx(2.0).epsilon(0.10));
}

TEST_CASE("pseudo-following adopts the drag from the occlusion frame onward") {
  SceneSpec scene;
  scene.width = 48;
  scene.height = 16;
  scene.num_frames = 12;
  scene.seed = 31;
  ObjectSpec obj;
  obj.size_x = 6.0;
  obj.size_y = 15.0;
  obj.start_x = 4.0;
  obj.start_y = 7.5;
  obj.vel_x = 3.0;
  scene.objects.push_back(obj);
  scene.background_points = 8;
  const RenderResult r = render(scene);

  DegradationSpec spec;
  spec.pseudo_follow = 1.0;
  spec.drag_dx = 3.0;
  spec.drag_dy = 0.0;
  spec.seed = 37;
  const TrajectoryFile degraded = degrade(r.gt, spec);

  int followed = 0;
  for (std::size_t i = 0; i < degraded.points.size(); ++i) {
    const Trajectory& truth = r.gt.points[i];
    const Trajectory& got = degraded.points[i];
    int occ = -1;
    for (const TrackPoint& pt : truth.points)
      if (!pt.visible) {
        occ = pt.frame;
        break;
      }
    if (occ < 0) {
      CHECK(got == truth);  // untouched without occlusion
      continue;
    }
    ++followed;
    for (int t = 0; t < degraded.num_frames; ++t) {
      if (t < occ) {
        CHECK(got.points[t].x == truth.points[t].x);
      } else {
        CHECK(got.points[t].x ==
              doctest::Approx(truth.points[occ].x + 3.0 * (t - occ)).epsilon(1e-12));
      }
      CHECK(got.points[t].visible == truth.points[t].visible);
    }
  }
  CHECK(followed > 0);
}

TEST_CASE("rendering and degradation are deterministic under a fixed seed") {
  SceneSpec scene;
  scene.width = 40;
  scene.height = 30;
  scene.num_frames = 10;
  scene.bg_noise_sigma = 2.0;
  scene.background_points = 6;
  scene.seed = 41;
  ObjectSpec obj;
  obj.size_x = 6.0;
  obj.size_y = 6.0;
  obj.start_x = 10.0;
  obj.start_y = 15.0;
  obj.vel_x = 1.0;
  obj.surface_points = 2;
  scene.objects.push_back(obj);

  const RenderResult a = render(scene);
  const RenderResult b = render(scene);
  CHECK(a.video.frames == b.video.frames);
  CHECK(a.gt == b.gt);

  DegradationSpec spec;
  spec.jitter_sigma = 1.0;
  spec.pseudo_follow = 0.5;
  spec.seed = 43;
  CHECK(degrade(a.gt, spec) == degrade(b.gt, spec));
}

}  // TEST_SUITE
