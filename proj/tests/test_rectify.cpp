#include <doctest.h>

#include <cmath>
#include <random>

#include "trackrect/errors.hpp"
#include "trackrect/rectify.hpp"

using namespace trackrect;

namespace {

CameraMotionResult motion_label(int moving) {
  CameraMotionResult m;
  m.coarse_label = moving;
  m.clip_labels = {moving};
  m.final_label = moving;
  return m;
}

// One square region centered in frames [t0, t1], empty elsewhere.
std::vector<ConfidentMovingRegion> square_regions(int num_frames, int t0, int t1, double x0,
                                                  double y0, double x1, double y1) {
  std::vector<ConfidentMovingRegion> regions(num_frames);
  for (int t = 0; t < num_frames; ++t) {
    regions[t].frame_index = t;
    if (t >= t0 && t <= t1) {
      Polygon p;
      p.vertices = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
      regions[t].polygons.push_back(p);
    }
  }
  return regions;
}

Trajectory line_track(QueryPoint q, int num_frames, double vx, double vy) {
  Trajectory traj;
  traj.query = q;
  for (int t = 0; t < num_frames; ++t)
    traj.points.push_back({t, q.x + vx * t, q.y + vy * t, t % 3 != 2});
  return traj;
}

}  // namespace

TEST_SUITE("rectify") {

TEST_CASE("static baseline pins every frame to the query") {
  const Trajectory traj = static_baseline({0, 50.0, 60.0}, 10);
  REQUIRE(traj.points.size() == 10);
  for (int t = 0; t < 10; ++t) {
    CHECK(traj.points[t].frame == t);
    CHECK(traj.points[t].x == 50.0);
    CHECK(traj.points[t].y == 60.0);
    CHECK(traj.points[t].visible);
  }

  // static in both time directions around a mid-video query
  const Trajectory mid = static_baseline({5, 1.0, 2.0}, 8);
  CHECK(mid.points[0].x == 1.0);
  CHECK(mid.points[7].x == 1.0);

  CHECK(static_baseline({0, 3.0, 4.0}, 1).points.size() == 1);
  CHECK_THROWS_AS(static_baseline({0, 0.0, 0.0}, 0), InputError);
}

TEST_CASE("is_moving_point is an existential membership test") {
  const int n = 6;
  const Trajectory still = line_track({0, 2.0, 2.0}, n, 0.0, 0.0);

  CHECK_FALSE(is_moving_point(still, square_regions(n, 0, n - 1, 10, 10, 20, 20)));
  CHECK(is_moving_point(line_track({0, 12.0, 12.0}, n, 0.0, 0.0),
                        square_regions(n, 3, 3, 10, 10, 20, 20)));
  CHECK_FALSE(is_moving_point(still, std::vector<ConfidentMovingRegion>(n)));
  CHECK_THROWS_AS(is_moving_point(still, square_regions(n - 1, 0, 0, 0, 0, 1, 1)), InputError);
}

TEST_CASE("moving camera passes everything through untouched") {
  const int n = 5;
  const std::vector<Trajectory> trajs = {line_track({0, 1.0, 1.0}, n, 2.0, 0.5)};
  const auto regions = square_regions(n, 0, n - 1, 0, 0, 30, 30);
  for (RectifyMode mode : {RectifyMode::passthrough, RectifyMode::cmd, RectifyMode::cmr_global,
                           RectifyMode::cmr_temporary}) {
    CHECK(rectify_video(trajs, motion_label(1), regions, mode) == trajs);
    // regions may be absent entirely for a moving camera
    CHECK(rectify_video(trajs, motion_label(1), {}, mode) == trajs);
  }
}

TEST_CASE("cmd replaces positions with the query, keeping visibility") {
  const int n = 6;
  const std::vector<Trajectory> trajs = {line_track({0, 10.0, 20.0}, n, 1.0, -1.0)};
  const auto out = rectify_video(trajs, motion_label(0), {}, RectifyMode::cmd);
  REQUIRE(out.size() == 1);
  for (int t = 0; t < n; ++t) {
    CHECK(out[0].points[t].x == 10.0);
    CHECK(out[0].points[t].y == 20.0);
    CHECK(out[0].points[t].visible == trajs[0].points[t].visible);
    CHECK(out[0].points[t].frame == t);
  }
}

TEST_CASE("cmr_global keeps region-crossing tracks verbatim and snaps the rest") {
  const int n = 6;
  const auto regions = square_regions(n, 2, 4, 10, 10, 20, 20);
  const Trajectory inside = line_track({0, 12.0, 12.0}, n, 0.5, 0.5);  // enters the square
  const Trajectory outside = line_track({0, 40.0, 40.0}, n, 0.5, 0.5);
  const auto out =
      rectify_video({inside, outside}, motion_label(0), regions, RectifyMode::cmr_global);
  CHECK(out[0] == inside);
  for (int t = 0; t < n; ++t) {
    CHECK(out[1].points[t].x == 40.0);
    CHECK(out[1].points[t].visible == outside.points[t].visible);
  }
}

TEST_CASE("cmr_temporary keeps only the in-region frames") {
  const int n = 6;
  // base stays at (12, 12); the region covers it at frames 3 and 4 only
  const Trajectory base = line_track({0, 12.0, 12.0}, n, 0.0, 0.0);
  std::vector<Trajectory> trajs = {base};
  trajs[0].points[1].x = 30.0;  // frame 1 wanders out of the region
  const auto regions = square_regions(n, 3, 4, 10, 10, 20, 20);
  const auto out = rectify_video(trajs, motion_label(0), regions, RectifyMode::cmr_temporary);
  for (int t = 0; t < n; ++t) {
    if (t == 3 || t == 4) {
      CHECK(out[0].points[t].x == trajs[0].points[t].x);
    } else {
      CHECK(out[0].points[t].x == 12.0);
      CHECK(out[0].points[t].y == 12.0);
    }
    CHECK(out[0].points[t].visible == trajs[0].points[t].visible);
  }
}

TEST_CASE("rectification is idempotent") {
  const int n = 8;
  std::mt19937 rng(83);
  std::uniform_real_distribution<double> coord(0.0, 50.0);
  std::vector<Trajectory> trajs;
  for (int i = 0; i < 6; ++i) {
    Trajectory t = line_track({0, coord(rng), coord(rng)}, n, coord(rng) / 25.0, 0.3);
    trajs.push_back(t);
  }
  const auto regions = square_regions(n, 1, 5, 15, 15, 35, 35);
  for (RectifyMode mode : {RectifyMode::cmd, RectifyMode::cmr_global, RectifyMode::cmr_temporary}) {
    const auto once = rectify_video(trajs, motion_label(0), regions, mode);
    const auto twice = rectify_video(once, motion_label(0), regions, mode);
    CHECK(once == twice);
  }
}

TEST_CASE("cmr_global degenerates to cmd on empty regions and passthrough on full ones") {
  const int n = 5;
  std::vector<Trajectory> trajs = {line_track({0, 5.0, 5.0}, n, 1.0, 0.0),
                                   line_track({0, 30.0, 9.0}, n, -0.5, 0.2)};
  const std::vector<ConfidentMovingRegion> empty(n);
  CHECK(rectify_video(trajs, motion_label(0), empty, RectifyMode::cmr_global) ==
        rectify_video(trajs, motion_label(0), empty, RectifyMode::cmd));

  const auto everywhere = square_regions(n, 0, n - 1, -10, -10, 100, 100);
  CHECK(rectify_video(trajs, motion_label(0), everywhere, RectifyMode::cmr_global) == trajs);
  // temporary also keeps everything when every frame is inside
  CHECK(rectify_video(trajs, motion_label(0), everywhere, RectifyMode::cmr_temporary) == trajs);
}

TEST_CASE("mode ladder never degrades static points with clean regions") {
  // Jittered static points that never touch the moving region: every
  // correcting mode removes the jitter entirely; passthrough keeps it.
  const int n = 20;
  std::mt19937 rng(89);
  std::normal_distribution<double> jitter(0.0, 1.5);
  std::vector<Trajectory> trajs;
  std::vector<QueryPoint> queries;
  for (int i = 0; i < 10; ++i) {
    const QueryPoint q{0, 5.0 + 4.0 * i, 60.0};
    queries.push_back(q);
    Trajectory traj;
    traj.query = q;
    for (int t = 0; t < n; ++t)
      traj.points.push_back({t, q.x + jitter(rng), q.y + jitter(rng), true});
    trajs.push_back(traj);
  }
  const auto regions = square_regions(n, 0, n - 1, 10, 10, 30, 20);  // far from y=60

  auto mean_error = [&](const std::vector<Trajectory>& tracks) {
    double err = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < tracks.size(); ++i)
      for (int t = 0; t < n; ++t) {
        err += std::hypot(tracks[i].points[t].x - queries[i].x,
                          tracks[i].points[t].y - queries[i].y);
        ++count;
      }
    return err / count;
  };

  const double pass = mean_error(rectify_video(trajs, motion_label(0), regions, RectifyMode::passthrough));
  const double cmd = mean_error(rectify_video(trajs, motion_label(0), regions, RectifyMode::cmd));
  const double glob = mean_error(rectify_video(trajs, motion_label(0), regions, RectifyMode::cmr_global));
  const double temp = mean_error(rectify_video(trajs, motion_label(0), regions, RectifyMode::cmr_temporary));
  CHECK(pass > cmd);
  CHECK(cmd >= glob);
  CHECK(glob >= temp);
  CHECK(temp == 0.0);
}

}  // TEST_SUITE
