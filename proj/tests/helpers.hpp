#ifndef TRACKRECT_TESTS_HELPERS_HPP
#define TRACKRECT_TESTS_HELPERS_HPP

#include <filesystem>
#include <random>
#include <string>

#include "trackrect/background.hpp"
#include "trackrect/video_io.hpp"

namespace trackrect::testing {

inline GrayFrame constant_frame(int w, int h, std::uint8_t value) {
  return GrayFrame(w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h, value));
}

inline GrayFrame random_frame(int w, int h, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, 255);
  std::vector<std::uint8_t> data(static_cast<std::size_t>(w) * h);
  for (auto& v : data) v = static_cast<std::uint8_t>(dist(rng));
  return GrayFrame(w, h, std::move(data));
}

inline GrayFrame noisy_copy(const GrayFrame& base, double sigma, std::mt19937& rng) {
  std::normal_distribution<double> noise(0.0, sigma);
  GrayFrame out = base;
  for (int y = 0; y < out.height(); ++y)
    for (int x = 0; x < out.width(); ++x) {
      const double v = base.at(x, y) + noise(rng);
      out.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
  return out;
}

inline ForegroundMask empty_mask(int w, int h) {
  return ForegroundMask{w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h, 0)};
}

/// Flood-fill the 4-connected background from the border and mark every
/// unreached background pixel as foreground, leaving a hole-free mask.
inline void fill_holes(ForegroundMask& mask) {
  const int w = mask.width, h = mask.height;
  std::vector<std::uint8_t> outside(mask.bits.size(), 0);
  std::vector<std::pair<int, int>> stack;
  auto push = [&](int x, int y) {
    const std::size_t i = static_cast<std::size_t>(y) * w + x;
    if (mask.bits[i] == 0 && !outside[i]) {
      outside[i] = 1;
      stack.emplace_back(x, y);
    }
  };
  for (int x = 0; x < w; ++x) {
    push(x, 0);
    push(x, h - 1);
  }
  for (int y = 0; y < h; ++y) {
    push(0, y);
    push(w - 1, y);
  }
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x > 0) push(x - 1, y);
    if (x + 1 < w) push(x + 1, y);
    if (y > 0) push(x, y - 1);
    if (y + 1 < h) push(x, y + 1);
  }
  for (std::size_t i = 0; i < mask.bits.size(); ++i)
    if (mask.bits[i] == 0 && !outside[i]) mask.bits[i] = 1;
}

/// Random blobby mask (rectangles, disks and a lattice walk), holes filled.
inline ForegroundMask random_hole_free_mask(int w, int h, std::mt19937& rng) {
  ForegroundMask mask = empty_mask(w, h);
  std::uniform_int_distribution<int> xd(0, w - 1), yd(0, h - 1);
  std::uniform_int_distribution<int> size(1, std::max(2, w / 3));
  std::uniform_int_distribution<int> shape(0, 2);
  std::uniform_int_distribution<int> count(1, 4);
  auto set = [&](int x, int y) {
    if (x >= 0 && y >= 0 && x < w && y < h)
      mask.bits[static_cast<std::size_t>(y) * w + x] = 1;
  };

  const int blobs = count(rng);
  for (int b = 0; b < blobs; ++b) {
    const int cx = xd(rng), cy = yd(rng);
    switch (shape(rng)) {
      case 0: {  // rectangle
        const int rw = size(rng), rh = size(rng);
        for (int y = cy; y < cy + rh; ++y)
          for (int x = cx; x < cx + rw; ++x) set(x, y);
        break;
      }
      case 1: {  // disk
        const int r = size(rng) / 2 + 1;
        for (int y = cy - r; y <= cy + r; ++y)
          for (int x = cx - r; x <= cx + r; ++x)
            if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) set(x, y);
        break;
      }
      default: {  // lattice walk (makes thin diagonal structures)
        int x = cx, y = cy;
        std::uniform_int_distribution<int> step(-1, 1);
        for (int i = 0; i < 40; ++i) {
          set(x, y);
          x = std::clamp(x + step(rng), 0, w - 1);
          y = std::clamp(y + step(rng), 0, h - 1);
        }
        break;
      }
    }
  }
  fill_holes(mask);
  return mask;
}

/// Unique scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  static std::mt19937_64 rng{std::random_device{}()};
  const auto dir = std::filesystem::temp_directory_path() /
                   ("trackrect_test_" + tag + "_" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace trackrect::testing

#endif
