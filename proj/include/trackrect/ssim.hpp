#ifndef TRACKRECT_SSIM_HPP
#define TRACKRECT_SSIM_HPP

#include "trackrect/video_io.hpp"

namespace trackrect {

/// Parameters of the uniform-window SSIM. The defaults replicate the common
/// reference implementation for 8-bit data: 7x7 box window, K1=0.01, K2=0.03,
/// data range 255, sample-covariance normalizer N/(N-1).
struct SsimParams {
  int window = 7;
  double k1 = 0.01;
  double k2 = 0.03;
  double data_range = 255.0;
  bool sample_covariance = true;
};

/// Mean structural similarity between two equally sized frames.
///
/// Window means, variances and covariance use a uniform window; the per-pixel
/// map is averaged over the interior obtained by cropping (window-1)/2 pixels
/// from each border. ssim(a, a) == 1.0 exactly, and the result is symmetric
/// in its arguments. Throws InputError on dimension mismatch or frames
/// smaller than the window.
double ssim(const GrayFrame& a, const GrayFrame& b, const SsimParams& params = {});

}  // namespace trackrect

#endif
