#ifndef TRACKRECT_PIPELINE_HPP
#define TRACKRECT_PIPELINE_HPP

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "trackrect/background.hpp"
#include "trackrect/camera_motion.hpp"
#include "trackrect/metrics.hpp"
#include "trackrect/rectify.hpp"
#include "trackrect/trajectory.hpp"

namespace trackrect {

enum class GroupSplit { metadata, detector };

struct PipelineConfig {
  CameraMotionConfig motion;
  BgConfig bg;
  int min_area = 9;
  RectifyMode mode = RectifyMode::cmr_temporary;
  AJConfig aj;
  GroupSplit group_split = GroupSplit::metadata;
  std::optional<std::filesystem::path> dump_mask_dir;
  std::optional<std::filesystem::path> dump_region_dir;
};

struct PipelineResult {
  CameraMotionResult motion;
  std::vector<ConfidentMovingRegion> regions;  // empty when the bg stage was skipped
  TrajectoryFile corrected;
  std::optional<VideoAJ> metrics;
  std::optional<bool> group_moving;
  nlohmann::json report;
};

/// Full flow over in-memory inputs: camera-motion detection, then (static
/// camera, cmr modes) per-frame background subtraction and region extraction,
/// then trajectory rectification and, when ground truth is given, Average
/// Jaccard of the corrected output. The report echoes the effective config.
PipelineResult run_pipeline(const PipelineConfig& cfg, const VideoSequence& video,
                            const TrajectoryFile& base_tracks,
                            const std::optional<TrajectoryFile>& gt_tracks);

/// File-based wrapper: loads the manifest and trajectory files, validates
/// consistency, and runs the pipeline.
PipelineResult run_pipeline_files(const PipelineConfig& cfg,
                                  const std::filesystem::path& manifest_path,
                                  const std::filesystem::path& base_tracks_path,
                                  const std::optional<std::filesystem::path>& gt_path);

}  // namespace trackrect

#endif
