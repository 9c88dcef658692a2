// trackrect command-line front end: synthesize test scenes, run the
// rectification pipeline on a video + trajectory file, and score
// trajectory files against ground truth.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trackrect/errors.hpp"
#include "trackrect/image_io.hpp"
#include "trackrect/metrics.hpp"
#include "trackrect/pipeline.hpp"
#include "trackrect/synthgen.hpp"
#include "trackrect/trajectory.hpp"
#include "trackrect/video_io.hpp"

namespace {

using nlohmann::json;
using namespace trackrect;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << doc.dump(1) << "\n";
}

// --- synth -----------------------------------------------------------------

ObjectSpec parse_object(const json& o) {
  ObjectSpec obj;
  const std::string shape = o.value("shape", "rectangle");
  if (shape == "rectangle")
    obj.shape = ObjectShape::rectangle;
  else if (shape == "disk")
    obj.shape = ObjectShape::disk;
  else
    throw InputError("scene: unknown object shape '" + shape + "'");
  if (o.contains("size")) {
    obj.size_x = o["size"][0].get<double>();
    obj.size_y = o["size"][1].get<double>();
  }
  if (o.contains("start")) {
    obj.start_x = o["start"][0].get<double>();
    obj.start_y = o["start"][1].get<double>();
  }
  const std::string path = o.value("path", "linear");
  if (path == "linear")
    obj.path = PathKind::linear;
  else if (path == "sinusoidal")
    obj.path = PathKind::sinusoidal;
  else
    throw InputError("scene: unknown path kind '" + path + "'");
  if (o.contains("velocity")) {
    obj.vel_x = o["velocity"][0].get<double>();
    obj.vel_y = o["velocity"][1].get<double>();
  }
  if (o.contains("amplitude")) {
    obj.amp_x = o["amplitude"][0].get<double>();
    obj.amp_y = o["amplitude"][1].get<double>();
  }
  obj.period = o.value("period", obj.period);
  obj.intensity = o.value("intensity", obj.intensity);
  obj.surface_points = o.value("surface_points", obj.surface_points);
  return obj;
}

SceneSpec parse_scene(const json& doc) {
  SceneSpec scene;
  scene.video_id = doc.value("video_id", scene.video_id);
  scene.width = doc.value("width", scene.width);
  scene.height = doc.value("height", scene.height);
  scene.num_frames = doc.value("num_frames", scene.num_frames);
  scene.fps = doc.value("fps", scene.fps);
  if (doc.contains("background")) {
    const json& bg = doc["background"];
    scene.bg_level = bg.value("level", scene.bg_level);
    scene.bg_noise_sigma = bg.value("noise_sigma", scene.bg_noise_sigma);
    scene.textured_bg = bg.value("textured", scene.textured_bg);
  }
  if (doc.contains("camera") && doc["camera"].contains("pan")) {
    scene.pan_dx = doc["camera"]["pan"][0].get<double>();
    scene.pan_dy = doc["camera"]["pan"][1].get<double>();
  }
  if (doc.contains("objects"))
    for (const json& o : doc["objects"]) scene.objects.push_back(parse_object(o));
  scene.background_points = doc.value("background_points", scene.background_points);
  scene.seed = doc.value("seed", scene.seed);
  return scene;
}

DegradationSpec parse_degradation(const json& doc) {
  DegradationSpec spec;
  spec.jitter_sigma = doc.value("jitter_sigma", spec.jitter_sigma);
  spec.pseudo_follow = doc.value("pseudo_follow", spec.pseudo_follow);
  if (doc.contains("drag")) {
    spec.drag_dx = doc["drag"][0].get<double>();
    spec.drag_dy = doc["drag"][1].get<double>();
  }
  spec.seed = doc.value("seed", spec.seed);
  return spec;
}

int run_synth(const std::filesystem::path& scene_path, const std::filesystem::path& out_dir) {
  std::ifstream in(scene_path);
  if (!in) throw InputError("cannot open scene file " + scene_path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("scene file " + scene_path.string() + ": " + e.what());
  }

  const SceneSpec scene = parse_scene(doc);
  const RenderResult rendered = render(scene);

  std::filesystem::create_directories(out_dir / "frames");
  json frame_list = json::array();
  for (int t = 0; t < rendered.video.num_frames(); ++t) {
    char name[32];
    std::snprintf(name, sizeof(name), "frames/%06d.pgm", t);
    const GrayFrame& f = rendered.video.frames[t];
    write_pgm(out_dir / name, f.width(), f.height(), f.data());
    frame_list.push_back(name);
  }
  write_json(out_dir / "manifest.json", json{{"video_id", rendered.video.video_id},
                                             {"fps", rendered.video.fps},
                                             {"frames", std::move(frame_list)}});
  save_trajectories(out_dir / "gt.json", rendered.gt);

  TrajectoryFile base = rendered.gt;
  if (doc.contains("degradation")) base = degrade(rendered.gt, parse_degradation(doc["degradation"]));
  save_trajectories(out_dir / "base.json", base);

  std::printf("wrote %s: %d frames, %zu tracks, camera %s\n",
              out_dir.string().c_str(), rendered.video.num_frames(), rendered.gt.points.size(),
              rendered.camera_label ? "moving" : "static");
  return kExitOk;
}

// --- run ---------------------------------------------------------------------

struct RunOptions {
  std::string manifest;
  std::string tracks;
  std::string gt;
  std::string out_tracks = "corrected.json";
  std::string report = "report.json";
  std::string mode = "cmr_temporary";
  std::string group_split = "metadata";
  std::string dump_masks;
  std::string dump_regions;
  double lambda1 = 0.5;
  double lambda2 = 0.46;
  double eta = 0.5;
  int min_area = 9;
  int bg_history = 500;
};

int run_run(const RunOptions& opt) {
  PipelineConfig cfg;
  cfg.motion.lambda1 = opt.lambda1;
  cfg.motion.lambda2 = opt.lambda2;
  cfg.motion.eta = opt.eta;
  cfg.bg.history = opt.bg_history;
  cfg.min_area = opt.min_area;
  cfg.mode = rectify_mode_from_string(opt.mode);
  cfg.group_split = opt.group_split == "detector" ? GroupSplit::detector : GroupSplit::metadata;
  if (!opt.dump_masks.empty()) cfg.dump_mask_dir = opt.dump_masks;
  if (!opt.dump_regions.empty()) cfg.dump_region_dir = opt.dump_regions;

  std::optional<std::filesystem::path> gt;
  if (!opt.gt.empty()) gt = opt.gt;

  const PipelineResult result = run_pipeline_files(cfg, opt.manifest, opt.tracks, gt);
  save_trajectories(opt.out_tracks, result.corrected);
  write_json(opt.report, result.report);

  std::printf("%s: camera %s", result.corrected.video_id.c_str(),
              result.motion.is_moving() ? "moving" : "static");
  if (result.metrics) std::printf(", AJ %.4f", result.metrics->aj);
  std::printf(" (tracks -> %s, report -> %s)\n", opt.out_tracks.c_str(), opt.report.c_str());
  return kExitOk;
}

// --- detect ------------------------------------------------------------------

int run_detect(const std::string& manifest, const std::string& report_path, double lambda1,
               double lambda2, double eta) {
  CameraMotionConfig cfg;
  cfg.lambda1 = lambda1;
  cfg.lambda2 = lambda2;
  cfg.eta = eta;
  const VideoSequence video = load_frames(manifest);
  const CameraMotionResult motion = detect(video, cfg);
  json doc{{"schema", 1},
           {"video_id", video.video_id},
           {"coarse_label", motion.coarse_label},
           {"dissimilar_ratio", motion.dissimilar_ratio},
           {"final_label", motion.final_label},
           {"verdict", motion.is_moving() ? "moving" : "static"}};
  if (!report_path.empty()) write_json(report_path, doc);
  std::printf("%s: %s (coarse %d, dissimilar ratio %.4f)\n", video.video_id.c_str(),
              motion.is_moving() ? "moving" : "static", motion.coarse_label,
              motion.dissimilar_ratio);
  return kExitOk;
}

// --- eval --------------------------------------------------------------------

int run_eval(const std::vector<std::string>& pred_paths, const std::vector<std::string>& gt_paths,
             const std::string& report_path) {
  if (pred_paths.size() != gt_paths.size())
    throw InputError("eval: need one --gt per --pred");
  if (pred_paths.empty()) throw InputError("eval: no inputs");

  const AJConfig cfg;
  std::vector<VideoAJ> per_video;
  std::vector<std::optional<bool>> labels;
  json videos = json::array();
  for (std::size_t i = 0; i < pred_paths.size(); ++i) {
    const TrajectoryFile pred = load_trajectories(pred_paths[i]);
    const TrajectoryFile gt = load_trajectories(gt_paths[i]);
    per_video.push_back(average_jaccard(pred, gt, cfg));
    labels.push_back(gt.camera_moving);
    videos.push_back({{"video_id", gt.video_id},
                      {"aj", per_video.back().aj},
                      {"camera_moving",
                       gt.camera_moving ? json(*gt.camera_moving) : json(nullptr)}});
    std::printf("%-24s AJ %.4f\n", gt.video_id.c_str(), per_video.back().aj);
  }

  const DatasetAJ dataset = aggregate_videos(per_video, labels);
  json groups{{"all", dataset.aj}};
  if (dataset.aj_static) groups["static"] = *dataset.aj_static;
  if (dataset.aj_moving) groups["moving"] = *dataset.aj_moving;
  std::printf("dataset AJ %.4f over %d videos", dataset.aj, dataset.num_videos);
  if (dataset.aj_static) std::printf(", static %.4f (%d)", *dataset.aj_static, dataset.num_static);
  if (dataset.aj_moving) std::printf(", moving %.4f (%d)", *dataset.aj_moving, dataset.num_moving);
  std::printf("\n");

  if (!report_path.empty())
    write_json(report_path, json{{"schema", 1},
                                 {"thresholds", cfg.thresholds},
                                 {"per_threshold_jaccard", dataset.per_threshold_jaccard},
                                 {"aj", dataset.aj},
                                 {"groups", std::move(groups)},
                                 {"videos", std::move(videos)}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point-trajectory rectification for static-camera videos"};
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "Render a synthetic scene with ground truth");
  std::string scene_path, out_dir;
  synth->add_option("--scene", scene_path, "Scene spec JSON")->required();
  synth->add_option("--out-dir", out_dir, "Output directory")->required();

  // run
  auto* run = app.add_subcommand("run", "Detect camera motion and rectify a trajectory file");
  RunOptions opt;
  run->add_option("--manifest", opt.manifest, "Video manifest JSON")->required();
  run->add_option("--tracks", opt.tracks, "Base trajectory JSON")->required();
  run->add_option("--gt", opt.gt, "Ground-truth trajectory JSON (enables metrics)");
  run->add_option("--out-tracks", opt.out_tracks, "Corrected trajectory output path");
  run->add_option("--report", opt.report, "Report JSON output path");
  run->add_option("--mode", opt.mode, "passthrough|cmd|cmr_global|cmr_temporary")
      ->check(CLI::IsMember({"passthrough", "cmd", "cmr_global", "cmr_temporary"}));
  run->add_option("--lambda1", opt.lambda1, "Coarse SSIM dissimilarity threshold");
  run->add_option("--lambda2", opt.lambda2, "Fine clip mean-SSIM threshold");
  run->add_option("--eta", opt.eta, "Dissimilar-frame ratio threshold");
  run->add_option("--min-area", opt.min_area, "Minimum region area in pixels");
  run->add_option("--bg-history", opt.bg_history, "Background model history (frames)");
  run->add_option("--dump-masks", opt.dump_masks, "Directory for per-frame mask PNGs");
  run->add_option("--dump-regions", opt.dump_regions, "Directory for per-frame region JSON");
  run->add_option("--group-split", opt.group_split, "metadata|detector")
      ->check(CLI::IsMember({"metadata", "detector"}));

  // detect
  auto* det = app.add_subcommand("detect", "Camera-motion detection only");
  std::string det_manifest, det_report;
  double det_l1 = 0.5, det_l2 = 0.46, det_eta = 0.5;
  det->add_option("--manifest", det_manifest, "Video manifest JSON")->required();
  det->add_option("--report", det_report, "Report JSON output path");
  det->add_option("--lambda1", det_l1, "Coarse SSIM dissimilarity threshold");
  det->add_option("--lambda2", det_l2, "Fine clip mean-SSIM threshold");
  det->add_option("--eta", det_eta, "Dissimilar-frame ratio threshold");

  // eval
  auto* eval = app.add_subcommand("eval", "Average Jaccard of trajectory files vs ground truth");
  std::vector<std::string> pred_paths, gt_paths;
  std::string eval_report;
  eval->add_option("--pred", pred_paths, "Predicted trajectory JSON (repeatable)")->required();
  eval->add_option("--gt", gt_paths, "Ground-truth trajectory JSON (repeatable)")->required();
  eval->add_option("--report", eval_report, "Report JSON output path");

  try {
    app.parse(argc, argv);
    if (synth->parsed()) return run_synth(scene_path, out_dir);
    if (run->parsed()) return run_run(opt);
    if (det->parsed()) return run_detect(det_manifest, det_report, det_l1, det_l2, det_eta);
    if (eval->parsed()) return run_eval(pred_paths, gt_paths, eval_report);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitOk;
}
