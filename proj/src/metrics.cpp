#include "trackrect/metrics.hpp"

#include <algorithm>

#include "trackrect/errors.hpp"

namespace trackrect {

namespace {

void require_matching_grids(const TrajectoryFile& pred, const TrajectoryFile& gt) {
  if (pred.num_frames != gt.num_frames || pred.points.size() != gt.points.size())
    throw InputError("metrics: prediction and ground truth cover different grids");
  if (pred.width != gt.width || pred.height != gt.height)
    throw InputError("metrics: prediction and ground truth resolutions differ");
  for (std::size_t i = 0; i < pred.points.size(); ++i)
    if (pred.points[i].query.frame != gt.points[i].query.frame)
      throw InputError("metrics: query frames differ between prediction and ground truth");
}

void validate(const AJConfig& cfg) {
  if (cfg.thresholds.empty()) throw InputError("aj config: need at least one threshold");
  for (std::size_t i = 0; i < cfg.thresholds.size(); ++i) {
    if (!(cfg.thresholds[i] > 0.0)) throw InputError("aj config: thresholds must be positive");
    if (i > 0 && cfg.thresholds[i] <= cfg.thresholds[i - 1])
      throw InputError("aj config: thresholds must ascend");
  }
  if (cfg.eval_width < 1 || cfg.eval_height < 1)
    throw InputError("aj config: bad evaluation resolution");
}

TrajectoryFile rescaled(const TrajectoryFile& file, int eval_w, int eval_h) {
  if (file.width == eval_w && file.height == eval_h) return file;
  const double sx = static_cast<double>(eval_w) / file.width;
  const double sy = static_cast<double>(eval_h) / file.height;
  TrajectoryFile out = file;
  out.width = eval_w;
  out.height = eval_h;
  for (Trajectory& traj : out.points) {
    traj.query.x *= sx;
    traj.query.y *= sy;
    for (TrackPoint& pt : traj.points) {
      pt.x *= sx;
      pt.y *= sy;
    }
  }
  return out;
}

}  // namespace

PairCounts count_pairs(const TrajectoryFile& pred, const TrajectoryFile& gt, double delta,
                       bool include_query_frame) {
  require_matching_grids(pred, gt);

  PairCounts counts;
  const double delta_sq = delta * delta;
  for (std::size_t i = 0; i < gt.points.size(); ++i) {
    const Trajectory& p = pred.points[i];
    const Trajectory& g = gt.points[i];
    for (int t = 0; t < gt.num_frames; ++t) {
      if (!include_query_frame && t == g.query.frame) continue;
      const bool pred_visible = p.points[t].visible;
      const bool gt_visible = g.points[t].visible;
      if (!pred_visible && !gt_visible) continue;

      const double dx = p.points[t].x - g.points[t].x;
      const double dy = p.points[t].y - g.points[t].y;
      const bool within = dx * dx + dy * dy <= delta_sq;

      if (gt_visible && pred_visible && within) {
        ++counts.tp;
      } else {
        if (gt_visible) ++counts.fn;
        if (pred_visible) ++counts.fp;
      }
    }
  }
  return counts;
}

double jaccard_at(const TrajectoryFile& pred, const TrajectoryFile& gt, double delta,
                  bool include_query_frame) {
  return count_pairs(pred, gt, delta, include_query_frame).jaccard();
}

VideoAJ average_jaccard(const TrajectoryFile& pred, const TrajectoryFile& gt,
                        const AJConfig& cfg) {
  validate(cfg);
  if (pred.width != gt.width || pred.height != gt.height)
    throw InputError("metrics: prediction and ground truth resolutions differ");
  const TrajectoryFile pred_eval = rescaled(pred, cfg.eval_width, cfg.eval_height);
  const TrajectoryFile gt_eval = rescaled(gt, cfg.eval_width, cfg.eval_height);

  VideoAJ result;
  result.per_threshold_jaccard.reserve(cfg.thresholds.size());
  double sum = 0.0;
  for (double delta : cfg.thresholds) {
    const double j = jaccard_at(pred_eval, gt_eval, delta, cfg.include_query_frame);
    result.per_threshold_jaccard.push_back(j);
    sum += j;
  }
  result.aj = sum / static_cast<double>(cfg.thresholds.size());
  return result;
}

DatasetAJ aggregate_videos(const std::vector<VideoAJ>& videos,
                           const std::vector<std::optional<bool>>& camera_moving) {
  if (videos.empty()) throw InputError("aggregate_videos: no videos");
  if (videos.size() != camera_moving.size())
    throw InputError("aggregate_videos: one camera label per video expected");
  const std::size_t num_thresholds = videos.front().per_threshold_jaccard.size();
  for (const VideoAJ& v : videos)
    if (v.per_threshold_jaccard.size() != num_thresholds)
      throw InputError("aggregate_videos: threshold lists differ across videos");

  DatasetAJ out;
  out.num_videos = static_cast<int>(videos.size());
  out.per_threshold_jaccard.assign(num_thresholds, 0.0);

  double sum_all = 0.0, sum_static = 0.0, sum_moving = 0.0;
  for (std::size_t i = 0; i < videos.size(); ++i) {
    sum_all += videos[i].aj;
    for (std::size_t k = 0; k < num_thresholds; ++k)
      out.per_threshold_jaccard[k] += videos[i].per_threshold_jaccard[k];
    if (camera_moving[i].has_value()) {
      if (*camera_moving[i]) {
        ++out.num_moving;
        sum_moving += videos[i].aj;
      } else {
        ++out.num_static;
        sum_static += videos[i].aj;
      }
    }
  }
  for (double& j : out.per_threshold_jaccard) j /= static_cast<double>(out.num_videos);
  out.aj = sum_all / static_cast<double>(out.num_videos);
  if (out.num_static > 0) out.aj_static = sum_static / out.num_static;
  if (out.num_moving > 0) out.aj_moving = sum_moving / out.num_moving;
  return out;
}

}  // namespace trackrect
