#ifndef TRACKRECT_IMAGE_IO_HPP
#define TRACKRECT_IMAGE_IO_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace trackrect {

/// Decoded raster: channels is 1 (gray) or 3 (RGB interleaved).
struct ImageBuffer {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> pixels;
};

/// Read a PNG, PGM or PPM image (dispatch on magic bytes). 16-bit, paletted
/// and alpha PNGs are normalized to 8-bit gray/RGB. Throws InputError.
ImageBuffer read_image(const std::filesystem::path& path);

/// Write an 8-bit grayscale PNG.
void write_png_gray(const std::filesystem::path& path, int width, int height,
                    std::span<const std::uint8_t> pixels);

/// Write an 8-bit interleaved RGB PNG.
void write_png_rgb(const std::filesystem::path& path, int width, int height,
                   std::span<const std::uint8_t> pixels);

/// Write a binary PGM (P5).
void write_pgm(const std::filesystem::path& path, int width, int height,
               std::span<const std::uint8_t> pixels);

}  // namespace trackrect

#endif
