#ifndef TRACKRECT_METRICS_HPP
#define TRACKRECT_METRICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "trackrect/trajectory.hpp"

namespace trackrect {

/// Average Jaccard configuration: distance thresholds in evaluation-space
/// pixels and the evaluation resolution. Trajectories in a different
/// resolution are rescaled into the evaluation space before scoring.
/// include_query_frame keeps (point, query-frame) pairs in the score (the
/// strided convention); switching it off skips them.
struct AJConfig {
  std::vector<double> thresholds{1.0, 2.0, 4.0, 8.0, 16.0};
  int eval_width = 256;
  int eval_height = 256;
  bool include_query_frame = true;
};

struct PairCounts {
  std::int64_t tp = 0;
  std::int64_t fn = 0;
  std::int64_t fp = 0;

  double jaccard() const {
    const std::int64_t denom = tp + fn + fp;
    return denom == 0 ? 1.0 : static_cast<double>(tp) / static_cast<double>(denom);
  }
};

/// Per-pair classification over the whole (point, frame) grid at one distance
/// threshold: a pair is TP when both sides are visible and within delta; a
/// visible ground-truth point that is missed (occluded prediction or beyond
/// delta) counts FN; a visible prediction that is wrong (occluded ground
/// truth or beyond delta) counts FP. Both-visible beyond delta is FN and FP.
PairCounts count_pairs(const TrajectoryFile& pred, const TrajectoryFile& gt, double delta,
                       bool include_query_frame = true);

/// Jaccard TP/(TP+FN+FP) at one threshold; 1 when the grid contributes no
/// pairs. Inputs must already be in the evaluation space.
double jaccard_at(const TrajectoryFile& pred, const TrajectoryFile& gt, double delta,
                  bool include_query_frame = true);

/// One video's score: per-threshold Jaccard pooled over the video's pairs and
/// their mean.
struct VideoAJ {
  std::vector<double> per_threshold_jaccard;
  double aj = 0.0;
};

VideoAJ average_jaccard(const TrajectoryFile& pred, const TrajectoryFile& gt,
                        const AJConfig& cfg = {});

/// Dataset aggregate: unweighted means of per-video scores, with subgroup
/// means over videos labeled static / moving (videos with no label only count
/// toward "all").
struct DatasetAJ {
  std::vector<double> per_threshold_jaccard;
  double aj = 0.0;
  std::optional<double> aj_static;
  std::optional<double> aj_moving;
  int num_videos = 0;
  int num_static = 0;
  int num_moving = 0;
};

DatasetAJ aggregate_videos(const std::vector<VideoAJ>& videos,
                           const std::vector<std::optional<bool>>& camera_moving);

}  // namespace trackrect

#endif
