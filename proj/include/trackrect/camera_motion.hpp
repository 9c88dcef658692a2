#ifndef TRACKRECT_CAMERA_MOTION_HPP
#define TRACKRECT_CAMERA_MOTION_HPP

#include <optional>
#include <span>
#include <vector>

#include "trackrect/ssim.hpp"
#include "trackrect/video_io.hpp"

namespace trackrect {

struct CameraMotionConfig {
  double lambda1 = 0.5;   // frame dissimilarity threshold (coarse stage)
  double lambda2 = 0.46;  // clip mean-similarity threshold (fine stage)
  double eta = 0.5;       // dissimilar-frame ratio threshold
  double clip_seconds = 5.0;
  SsimParams ssim;
};

/// Labels: 0 = static camera, 1 = moving camera.
struct CameraMotionResult {
  int coarse_label = 0;
  double dissimilar_ratio = 0.0;
  std::vector<int> clip_labels;                       // all 0 when fine stage skipped
  std::vector<std::optional<double>> clip_mean_ssim;  // nullopt when fine stage skipped
  std::vector<int> clip_starts;
  bool fine_stage_evaluated = false;
  int final_label = 0;

  bool is_moving() const { return final_label == 1; }
};

/// Threshold rules, kept separate so the decision boundaries are testable in
/// isolation. Both comparisons are strict.
inline int coarse_label_from_ratio(double ratio, double eta) { return ratio > eta ? 1 : 0; }
inline int fine_label_from_mean(double mean_ssim, double lambda2) {
  return mean_ssim < lambda2 ? 1 : 0;
}

/// Final verdict: moving iff the coarse stage fired and at least one clip did.
int combine_labels(int coarse_label, std::span<const int> clip_labels);

/// Coarse stage: ratio of frames whose similarity to the first frame falls
/// below lambda1 (the reference frame itself contributes 0 to the count and
/// 1 to the denominator). Returns {label, ratio}. Requires >= 2 frames.
std::pair<int, double> coarse_detect(const VideoSequence& video, const CameraMotionConfig& cfg);

/// Fine stage for one clip: mean similarity of every clip frame against the
/// clip's first frame (reference term = 1). Returns {label, mean}. Requires a
/// clip of >= 2 frames.
std::pair<int, double> fine_detect_clip(const Clip& clip, const CameraMotionConfig& cfg);

/// Full detector. The fine stage only runs when the coarse stage fired; when
/// skipped, clip labels are reported as all zero and clip means are absent.
CameraMotionResult detect(const VideoSequence& video, const CameraMotionConfig& cfg = {});

}  // namespace trackrect

#endif
