#include "trackrect/video_io.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "trackrect/errors.hpp"
#include "trackrect/image_io.hpp"

namespace trackrect {

GrayFrame::GrayFrame(int width, int height)
    : GrayFrame(width, height, std::vector<std::uint8_t>(
                                   static_cast<std::size_t>(width > 0 ? width : 0) *
                                   static_cast<std::size_t>(height > 0 ? height : 0))) {}

GrayFrame::GrayFrame(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width_ < 1 || height_ < 1)
    throw InputError("GrayFrame: dimensions must be positive");
  if (width_ > kMaxSide || height_ > kMaxSide)
    throw InputError("GrayFrame: dimensions exceed the 256x256 evaluation cap");
  if (data_.size() != static_cast<std::size_t>(width_) * height_)
    throw InputError("GrayFrame: data length does not match width*height");
}

std::uint8_t luma_bt601(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const double y = 0.299 * r + 0.587 * g + 0.114 * b;
  const double rounded = std::floor(y + 0.5);  // round half up
  if (rounded < 0.0) return 0;
  if (rounded > 255.0) return 255;
  return static_cast<std::uint8_t>(rounded);
}

GrayFrame to_grayscale(int width, int height, std::span<const std::uint8_t> rgb) {
  if (width < 1 || height < 1 || rgb.size() != static_cast<std::size_t>(width) * height * 3)
    throw InputError("to_grayscale: buffer/dimension mismatch");
  std::vector<std::uint8_t> gray(static_cast<std::size_t>(width) * height);
  for (std::size_t i = 0; i < gray.size(); ++i)
    gray[i] = luma_bt601(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]);
  return GrayFrame(width, height, std::move(gray));
}

VideoSequence load_frames(const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw InputError("cannot open manifest " + manifest_path.string());

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("manifest " + manifest_path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("video_id") || !doc.contains("fps") ||
      !doc.contains("frames") || !doc["frames"].is_array())
    throw InputError("manifest " + manifest_path.string() +
                     ": expected {video_id, fps, frames[]}");

  VideoSequence video;
  video.video_id = doc["video_id"].get<std::string>();
  video.fps = doc["fps"].get<double>();
  if (!(video.fps > 0.0))
    throw InputError("manifest " + manifest_path.string() + ": fps must be > 0");
  if (doc["frames"].empty())
    throw InputError("manifest " + manifest_path.string() + ": no frames");

  const std::filesystem::path base = manifest_path.parent_path();
  video.frames.reserve(doc["frames"].size());
  for (const auto& entry : doc["frames"]) {
    const std::filesystem::path frame_path = base / entry.get<std::string>();
    ImageBuffer img = read_image(frame_path);
    GrayFrame frame = img.channels == 3
                          ? to_grayscale(img.width, img.height, img.pixels)
                          : GrayFrame(img.width, img.height, std::move(img.pixels));
    if (!video.frames.empty() && (frame.width() != video.width() || frame.height() != video.height()))
      throw InputError("frame " + frame_path.string() + ": dimensions " +
                       std::to_string(frame.width()) + "x" + std::to_string(frame.height()) +
                       " differ from first frame");
    video.frames.push_back(std::move(frame));
  }
  return video;
}

std::vector<Clip> segment_clips(const VideoSequence& video, double clip_seconds) {
  if (video.frames.empty()) throw InputError("segment_clips: empty video");
  if (!(clip_seconds > 0.0)) throw InputError("segment_clips: clip_seconds must be > 0");
  if (!(video.fps > 0.0)) throw InputError("segment_clips: fps must be > 0");

  const int total = video.num_frames();
  int clip_len = static_cast<int>(std::floor(clip_seconds * video.fps + 0.5));
  if (clip_len < 1) clip_len = 1;

  const std::span<const GrayFrame> all(video.frames);
  std::vector<Clip> clips;
  for (int start = 0; start < total; start += clip_len) {
    const int remaining = total - start;
    if (clip_len >= 2 && remaining == clip_len + 1) {
      // the trailing partial would have a single frame: merge it backward
      clips.push_back({start, all.subspan(start, remaining)});
      break;
    }
    clips.push_back({start, all.subspan(start, std::min(clip_len, remaining))});
  }
  return clips;
}

}  // namespace trackrect
