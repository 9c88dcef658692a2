#include "trackrect/camera_motion.hpp"

#include "trackrect/errors.hpp"

namespace trackrect {

namespace {

void validate(const CameraMotionConfig& cfg) {
  auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in01(cfg.lambda1) || !in01(cfg.lambda2) || !in01(cfg.eta))
    throw InputError("camera motion config: thresholds must lie in [0,1]");
  if (!(cfg.clip_seconds > 0.0))
    throw InputError("camera motion config: clip_seconds must be > 0");
}

}  // namespace

int combine_labels(int coarse_label, std::span<const int> clip_labels) {
  int any_fine = 0;
  for (int l : clip_labels) any_fine |= (l != 0);
  return (coarse_label != 0 && any_fine) ? 1 : 0;
}

std::pair<int, double> coarse_detect(const VideoSequence& video, const CameraMotionConfig& cfg) {
  validate(cfg);
  const int total = video.num_frames();
  if (total < 2) throw InputError("coarse_detect: need at least 2 frames");

  const GrayFrame& reference = video.frames.front();
  int dissimilar = 0;
  for (int i = 1; i < total; ++i)
    if (ssim(reference, video.frames[i], cfg.ssim) < cfg.lambda1) ++dissimilar;

  const double ratio = static_cast<double>(dissimilar) / static_cast<double>(total);
  return {coarse_label_from_ratio(ratio, cfg.eta), ratio};
}

std::pair<int, double> fine_detect_clip(const Clip& clip, const CameraMotionConfig& cfg) {
  validate(cfg);
  const int total = clip.num_frames();
  if (total < 2) throw InputError("fine_detect_clip: need at least 2 frames per clip");

  const GrayFrame& reference = clip.frames.front();
  double sum = 1.0;  // SSIM(reference, reference)
  for (int i = 1; i < total; ++i) sum += ssim(reference, clip.frames[i], cfg.ssim);

  const double mean = sum / static_cast<double>(total);
  return {fine_label_from_mean(mean, cfg.lambda2), mean};
}

CameraMotionResult detect(const VideoSequence& video, const CameraMotionConfig& cfg) {
  validate(cfg);

  CameraMotionResult result;
  std::tie(result.coarse_label, result.dissimilar_ratio) = coarse_detect(video, cfg);

  const std::vector<Clip> clips = segment_clips(video, cfg.clip_seconds);
  const int n = static_cast<int>(clips.size());
  result.clip_labels.assign(n, 0);
  result.clip_mean_ssim.assign(n, std::nullopt);
  result.clip_starts.resize(n);
  for (int j = 0; j < n; ++j) result.clip_starts[j] = clips[j].start_frame;

  // The final verdict is a conjunction, so the fine stage only matters when
  // the coarse stage fired.
  if (result.coarse_label == 1) {
    result.fine_stage_evaluated = true;
    for (int j = 0; j < n; ++j) {
      auto [label, mean] = fine_detect_clip(clips[j], cfg);
      result.clip_labels[j] = label;
      result.clip_mean_ssim[j] = mean;
    }
  }

  result.final_label = combine_labels(result.coarse_label, result.clip_labels);
  return result;
}

}  // namespace trackrect
