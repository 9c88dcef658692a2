#include "trackrect/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <memory>
#include <string>

#include "trackrect/errors.hpp"

namespace trackrect {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  FilePtr f(std::fopen(path.string().c_str(), mode));
  if (!f) throw InputError("cannot open " + path.string());
  return f;
}

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw InputError(path.string() + ": " + what);
}

// --- PNM -------------------------------------------------------------------

int pnm_token(std::FILE* f, const std::filesystem::path& path) {
  int c = std::fgetc(f);
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = std::fgetc(f);
    } else if (std::isspace(c)) {
      c = std::fgetc(f);
    } else {
      break;
    }
  }
  if (c == EOF || !std::isdigit(c)) fail(path, "malformed PNM header");
  long v = 0;
  while (c != EOF && std::isdigit(c)) {
    v = v * 10 + (c - '0');
    if (v > 1'000'000) fail(path, "PNM header value out of range");
    c = std::fgetc(f);
  }
  return static_cast<int>(v);
}

ImageBuffer read_pnm(const std::filesystem::path& path, char kind) {
  FilePtr f = open_file(path, "rb");
  std::fgetc(f.get());  // 'P'
  std::fgetc(f.get());  // digit
  const int channels = (kind == '3' || kind == '6') ? 3 : 1;
  const bool binary = (kind == '5' || kind == '6');

  ImageBuffer img;
  img.width = pnm_token(f.get(), path);
  img.height = pnm_token(f.get(), path);
  const int maxval = pnm_token(f.get(), path);
  if (img.width <= 0 || img.height <= 0) fail(path, "bad PNM dimensions");
  if (maxval != 255) fail(path, "only 8-bit PNM supported");
  img.channels = channels;
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height * channels;
  img.pixels.resize(n);

  if (binary) {
    // exactly one whitespace byte separates header from raster
    if (std::fread(img.pixels.data(), 1, n, f.get()) != n) fail(path, "truncated PNM raster");
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const int v = pnm_token(f.get(), path);
      if (v > 255) fail(path, "PNM sample out of range");
      img.pixels[i] = static_cast<std::uint8_t>(v);
    }
  }
  return img;
}

// --- PNG -------------------------------------------------------------------

ImageBuffer read_png(const std::filesystem::path& path) {
  FilePtr f = open_file(path, "rb");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    fail(path, "libpng init failed");
  }

  ImageBuffer img;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "PNG decode error");
  }

  png_init_io(png, f.get());
  png_read_info(png, info);

  const png_byte color_type = png_get_color_type(png, info);
  const png_byte bit_depth = png_get_bit_depth(png, info);

  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  png_read_update_info(png, info);

  img.width = static_cast<int>(png_get_image_width(png, info));
  img.height = static_cast<int>(png_get_image_height(png, info));
  img.channels = png_get_channels(png, info);
  if (img.channels != 1 && img.channels != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "unsupported PNG channel count");
  }

  const std::size_t stride = static_cast<std::size_t>(img.width) * img.channels;
  img.pixels.resize(stride * img.height);
  rows.resize(img.height);
  for (int y = 0; y < img.height; ++y) rows[y] = img.pixels.data() + stride * y;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

}  // namespace

ImageBuffer read_image(const std::filesystem::path& path) {
  FilePtr f = open_file(path, "rb");
  unsigned char magic[2] = {0, 0};
  if (std::fread(magic, 1, 2, f.get()) != 2) fail(path, "file too short");
  f.reset();

  if (magic[0] == 0x89 && magic[1] == 'P') return read_png(path);
  if (magic[0] == 'P' && (magic[1] == '2' || magic[1] == '3' || magic[1] == '5' || magic[1] == '6'))
    return read_pnm(path, static_cast<char>(magic[1]));
  fail(path, "unrecognized image format (PNG/PGM/PPM expected)");
}

namespace {

void write_png_impl(const std::filesystem::path& path, int width, int height, int channels,
                    std::span<const std::uint8_t> pixels) {
  if (width <= 0 || height <= 0 ||
      pixels.size() != static_cast<std::size_t>(width) * height * channels)
    throw InternalError("write_png: buffer/dimension mismatch");

  FilePtr f = open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    fail(path, "libpng init failed");
  }
  std::vector<png_bytep> rows(height);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(path, "PNG encode error");
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
               channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  for (int y = 0; y < height; ++y)
    rows[y] = const_cast<png_bytep>(pixels.data() + stride * y);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

void write_png_gray(const std::filesystem::path& path, int width, int height,
                    std::span<const std::uint8_t> pixels) {
  write_png_impl(path, width, height, 1, pixels);
}

void write_png_rgb(const std::filesystem::path& path, int width, int height,
                   std::span<const std::uint8_t> pixels) {
  write_png_impl(path, width, height, 3, pixels);
}

void write_pgm(const std::filesystem::path& path, int width, int height,
               std::span<const std::uint8_t> pixels) {
  if (width <= 0 || height <= 0 ||
      pixels.size() != static_cast<std::size_t>(width) * height)
    throw InternalError("write_pgm: buffer/dimension mismatch");
  FilePtr f = open_file(path, "wb");
  const std::string header = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  if (std::fwrite(header.data(), 1, header.size(), f.get()) != header.size() ||
      std::fwrite(pixels.data(), 1, pixels.size(), f.get()) != pixels.size())
    fail(path, "short write");
}

}  // namespace trackrect
