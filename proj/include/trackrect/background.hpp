#ifndef TRACKRECT_BACKGROUND_HPP
#define TRACKRECT_BACKGROUND_HPP

#include <cstdint>
#include <vector>

#include "trackrect/video_io.hpp"

namespace trackrect {

/// Adaptive Gaussian-mixture background model configuration. The numeric
/// defaults mirror the de-facto standard implementation of the Zivkovic
/// method: 500-frame history (learning rate 1/500), squared-Mahalanobis
/// thresholds 16 (background test) and 9 (component ownership), top-weight
/// background fraction 0.9, complexity-reduction prior 0.05, at most 5
/// components, initial variance 15^2 clamped to [4, 5*15^2].
struct BgConfig {
  int history = 500;
  double var_threshold_bg = 16.0;
  double var_threshold_gen = 9.0;
  double background_ratio = 0.9;
  double ct = 0.05;
  int max_components = 5;
  double var_init = 225.0;
  double var_min = 4.0;
  double var_max = 5.0 * 225.0;

  double alpha() const { return 1.0 / static_cast<double>(history); }
};

struct GaussianComponent {
  double weight = 0.0;
  double mean = 0.0;
  double var = 0.0;
};

/// Mixture state of one pixel: components sorted by weight descending,
/// weights summing to 1.
struct PixelModel {
  std::vector<GaussianComponent> components;
};

/// Binary motion mask; 1 = moving/foreground.
struct ForegroundMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  std::uint8_t at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x]; }
  int foreground_count() const;

  bool operator==(const ForegroundMask&) const = default;
};

/// Per-pixel mixture grid plus the config it was initialized with. Update
/// order across frames matters; a model must be fed frames sequentially.
class BackgroundModel {
 public:
  BackgroundModel(int width, int height, const BgConfig& cfg);

  int width() const { return width_; }
  int height() const { return height_; }
  const BgConfig& config() const { return cfg_; }

  const PixelModel& pixel(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }
  PixelModel& pixel(int x, int y) { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }

 private:
  int width_;
  int height_;
  BgConfig cfg_;
  std::vector<PixelModel> pixels_;
};

/// Seed a model from the first frame: one component per pixel with weight 1,
/// mean = pixel value and variance var_init.
BackgroundModel bg_init(const GrayFrame& first_frame, const BgConfig& cfg = {});

/// Background test against the current (pre-update) state: the background set
/// is the smallest prefix of weight-sorted components whose cumulative weight
/// exceeds background_ratio; the value is background iff its squared
/// Mahalanobis distance to some component of that set is below
/// var_threshold_bg. Returns true for foreground.
bool classify_pixel(const PixelModel& pixel, double value, const BgConfig& cfg);

/// One model step: classify every pixel against the pre-update state, then
/// update the mixtures (ownership by the closest matching component, weight /
/// mean / variance updates with the ct prior, pruning, insertion on no match,
/// renormalization, re-sort). Returns the pre-update foreground mask.
ForegroundMask bg_update(BackgroundModel& model, const GrayFrame& frame);

}  // namespace trackrect

#endif
