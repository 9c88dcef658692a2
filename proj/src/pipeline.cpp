#include "trackrect/pipeline.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>

#include "trackrect/errors.hpp"
#include "trackrect/image_io.hpp"
#include "trackrect/region.hpp"
#include "trackrect/video_io.hpp"

namespace trackrect {

namespace {

using nlohmann::json;

std::string frame_file_name(const char* stem, int frame, const char* ext) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s_%06d.%s", stem, frame, ext);
  return buf;
}

void dump_mask(const std::filesystem::path& dir, int frame, const ForegroundMask& mask) {
  std::filesystem::create_directories(dir);
  std::vector<std::uint8_t> pixels(mask.bits.size());
  for (std::size_t i = 0; i < mask.bits.size(); ++i) pixels[i] = mask.bits[i] ? 255 : 0;
  write_png_gray(dir / frame_file_name("mask", frame, "png"), mask.width, mask.height, pixels);
}

void dump_region(const std::filesystem::path& dir, const ConfidentMovingRegion& region) {
  std::filesystem::create_directories(dir);
  json polys = json::array();
  for (const Polygon& poly : region.polygons) {
    json verts = json::array();
    for (const Point2d& v : poly.vertices) verts.push_back({v.x, v.y});
    polys.push_back(std::move(verts));
  }
  json doc{{"frame", region.frame_index}, {"polygons", std::move(polys)}};
  std::ofstream out(dir / frame_file_name("regions", region.frame_index, "json"),
                    std::ios::binary);
  if (!out) throw InputError("cannot write region dump in " + dir.string());
  out << doc.dump(1) << "\n";
}

json motion_to_json(const CameraMotionResult& motion) {
  json clips = json::array();
  for (std::size_t j = 0; j < motion.clip_labels.size(); ++j) {
    json clip{{"start_frame", motion.clip_starts[j]}, {"label", motion.clip_labels[j]}};
    if (motion.clip_mean_ssim[j].has_value())
      clip["mean_ssim"] = *motion.clip_mean_ssim[j];
    else
      clip["mean_ssim"] = nullptr;
    clips.push_back(std::move(clip));
  }
  return json{{"coarse_label", motion.coarse_label},
              {"dissimilar_ratio", motion.dissimilar_ratio},
              {"clips", std::move(clips)},
              {"fine_stage_evaluated", motion.fine_stage_evaluated},
              {"final_label", motion.final_label},
              {"verdict", motion.is_moving() ? "moving" : "static"}};
}

json config_to_json(const PipelineConfig& cfg) {
  return json{
      {"lambda1", cfg.motion.lambda1},
      {"lambda2", cfg.motion.lambda2},
      {"eta", cfg.motion.eta},
      {"clip_seconds", cfg.motion.clip_seconds},
      {"mode", to_string(cfg.mode)},
      {"min_area", cfg.min_area},
      {"bg",
       {{"history", cfg.bg.history},
        {"var_threshold_bg", cfg.bg.var_threshold_bg},
        {"var_threshold_gen", cfg.bg.var_threshold_gen},
        {"background_ratio", cfg.bg.background_ratio},
        {"ct", cfg.bg.ct},
        {"max_components", cfg.bg.max_components},
        {"var_init", cfg.bg.var_init},
        {"var_min", cfg.bg.var_min},
        {"var_max", cfg.bg.var_max}}},
      {"aj",
       {{"thresholds", cfg.aj.thresholds},
        {"resolution", {cfg.aj.eval_width, cfg.aj.eval_height}},
        {"include_query_frame", cfg.aj.include_query_frame}}},
      {"group_split", cfg.group_split == GroupSplit::metadata ? "metadata" : "detector"}};
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& cfg, const VideoSequence& video,
                            const TrajectoryFile& base_tracks,
                            const std::optional<TrajectoryFile>& gt_tracks) {
  if (base_tracks.num_frames != video.num_frames())
    throw InputError("pipeline: trajectory file covers " + std::to_string(base_tracks.num_frames) +
                     " frames but the video has " + std::to_string(video.num_frames()));
  if (base_tracks.width != video.width() || base_tracks.height != video.height())
    throw InputError("pipeline: trajectory resolution differs from the video");

  PipelineResult result;
  result.motion = detect(video, cfg.motion);

  const bool cmr_mode =
      cfg.mode == RectifyMode::cmr_global || cfg.mode == RectifyMode::cmr_temporary;
  const bool wants_dumps = cfg.dump_mask_dir || cfg.dump_region_dir;
  const bool run_bg_stage = !result.motion.is_moving() && (cmr_mode || wants_dumps);

  if (run_bg_stage) {
    BackgroundModel model = bg_init(video.frames.front(), cfg.bg);
    result.regions.reserve(video.num_frames());
    for (int t = 0; t < video.num_frames(); ++t) {
      const ForegroundMask mask = bg_update(model, video.frames[t]);
      result.regions.push_back(extract_regions(mask, cfg.min_area, t));
      if (cfg.dump_mask_dir) dump_mask(*cfg.dump_mask_dir, t, mask);
      if (cfg.dump_region_dir) dump_region(*cfg.dump_region_dir, result.regions.back());
    }
  }

  result.corrected = base_tracks;
  result.corrected.points =
      rectify_video(base_tracks.points, result.motion, result.regions, cfg.mode);

  int num_modified = 0;
  for (std::size_t i = 0; i < base_tracks.points.size(); ++i)
    num_modified += !(result.corrected.points[i] == base_tracks.points[i]);

  // Group label: declared metadata when requested and present, the detector
  // verdict otherwise.
  const char* group_source = "detector";
  bool group_moving = result.motion.is_moving();
  if (cfg.group_split == GroupSplit::metadata) {
    if (gt_tracks && gt_tracks->camera_moving) {
      group_moving = *gt_tracks->camera_moving;
      group_source = "metadata";
    } else if (base_tracks.camera_moving) {
      group_moving = *base_tracks.camera_moving;
      group_source = "metadata";
    }
  }
  result.group_moving = group_moving;

  json report{{"schema", 1},
              {"video_id", video.video_id},
              {"num_frames", video.num_frames()},
              {"resolution", {video.width(), video.height()}},
              {"camera_motion", motion_to_json(result.motion)},
              {"config", config_to_json(cfg)},
              {"rectification",
               {{"applied", !result.motion.is_moving() && cfg.mode != RectifyMode::passthrough},
                {"mode", to_string(cfg.mode)},
                {"num_trajectories", base_tracks.points.size()},
                {"num_modified", num_modified}}},
              {"group", {{"source", group_source}, {"camera_moving", group_moving}}}};

  if (gt_tracks) {
    result.metrics = average_jaccard(result.corrected, *gt_tracks, cfg.aj);
    json groups{{"all", result.metrics->aj}};
    groups[group_moving ? "moving" : "static"] = result.metrics->aj;
    report["metrics"] = json{{"thresholds", cfg.aj.thresholds},
                             {"per_threshold_jaccard", result.metrics->per_threshold_jaccard},
                             {"aj", result.metrics->aj},
                             {"groups", std::move(groups)}};
  }

  result.report = std::move(report);
  return result;
}

PipelineResult run_pipeline_files(const PipelineConfig& cfg,
                                  const std::filesystem::path& manifest_path,
                                  const std::filesystem::path& base_tracks_path,
                                  const std::optional<std::filesystem::path>& gt_path) {
  const VideoSequence video = load_frames(manifest_path);
  const TrajectoryFile base = load_trajectories(base_tracks_path);
  std::optional<TrajectoryFile> gt;
  if (gt_path) gt = load_trajectories(*gt_path);
  return run_pipeline(cfg, video, base, gt);
}

}  // namespace trackrect
