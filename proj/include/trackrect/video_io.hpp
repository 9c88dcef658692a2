#ifndef TRACKRECT_VIDEO_IO_HPP
#define TRACKRECT_VIDEO_IO_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace trackrect {

/// Single 8-bit luminance frame, row-major. Evaluation resolution is capped
/// at 256x256, so the constructor rejects anything larger.
class GrayFrame {
 public:
  static constexpr int kMaxSide = 256;

  GrayFrame(int width, int height);
  GrayFrame(int width, int height, std::vector<std::uint8_t> data);

  int width() const { return width_; }
  int height() const { return height_; }

  std::uint8_t at(int x, int y) const { return data_[static_cast<std::size_t>(y) * width_ + x]; }
  std::uint8_t& at(int x, int y) { return data_[static_cast<std::size_t>(y) * width_ + x]; }

  std::span<const std::uint8_t> data() const { return data_; }
  std::span<std::uint8_t> data() { return data_; }

  bool operator==(const GrayFrame&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Ordered grayscale frame stack. All frames share dimensions; fps > 0.
struct VideoSequence {
  std::vector<GrayFrame> frames;
  double fps = 0.0;
  std::string video_id;

  int num_frames() const { return static_cast<int>(frames.size()); }
  int width() const { return frames.empty() ? 0 : frames.front().width(); }
  int height() const { return frames.empty() ? 0 : frames.front().height(); }
};

/// Contiguous slice of a parent video's frames. Non-owning: the video must
/// outlive its clips.
struct Clip {
  int start_frame = 0;
  std::span<const GrayFrame> frames;

  int num_frames() const { return static_cast<int>(frames.size()); }
};

/// BT.601 luma, round half up.
std::uint8_t luma_bt601(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Convert an interleaved 8-bit RGB buffer to a grayscale frame.
GrayFrame to_grayscale(int width, int height, std::span<const std::uint8_t> rgb);

/// Load a video from a frame-directory manifest:
///   {"video_id": str, "fps": number, "frames": ["relative/path.png", ...]}
/// Frame paths are resolved relative to the manifest's directory. PNG
/// (8-bit gray or RGB) and PGM/PPM images are accepted; color frames are
/// grayscale-converted on load. Throws InputError on missing files, fps <= 0,
/// an empty frame list, or inconsistent dimensions.
VideoSequence load_frames(const std::filesystem::path& manifest_path);

/// Partition a video into consecutive clips of round(clip_seconds * fps)
/// frames. A trailing partial clip is kept when it has >= 2 frames and merged
/// into the previous clip otherwise; a video shorter than one clip forms a
/// single clip.
std::vector<Clip> segment_clips(const VideoSequence& video, double clip_seconds = 5.0);

}  // namespace trackrect

#endif
