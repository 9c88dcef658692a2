#include "trackrect/region.hpp"

#include <algorithm>
#include <utility>

#include "trackrect/errors.hpp"

namespace trackrect {

namespace {

// Moore neighborhood in clockwise order for y-down image coordinates:
// E, SE, S, SW, W, NW, N, NE.
constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};

struct Pixel {
  int x = 0;
  int y = 0;
  bool operator==(const Pixel&) const = default;
};

int direction_of(Pixel from, Pixel to) {
  for (int d = 0; d < 8; ++d)
    if (from.x + kDx[d] == to.x && from.y + kDy[d] == to.y) return d;
  throw InternalError("contour tracing: pixels are not Moore neighbors");
}

class MaskView {
 public:
  explicit MaskView(const ForegroundMask& mask) : mask_(mask) {}

  bool fg(int x, int y) const {
    if (x < 0 || y < 0 || x >= mask_.width || y >= mask_.height) return false;
    return mask_.bits[static_cast<std::size_t>(y) * mask_.width + x] != 0;
  }

 private:
  const ForegroundMask& mask_;
};

// Suzuki-style outer border following around the 8-connected component
// containing `start`, which must be its first pixel in raster order.
std::vector<Pixel> trace_outer_border(const MaskView& mask, Pixel start, long max_steps) {
  std::vector<Pixel> contour{start};

  // Scan clockwise from the west neighbor (background by raster-first choice)
  // for the first foreground neighbor.
  Pixel first_found{};
  bool isolated = true;
  for (int k = 0; k < 8; ++k) {
    const int d = (4 + k) % 8;  // start at W
    const Pixel cand{start.x + kDx[d], start.y + kDy[d]};
    if (mask.fg(cand.x, cand.y)) {
      first_found = cand;
      isolated = false;
      break;
    }
  }
  if (isolated) return contour;  // single-pixel component

  Pixel prev = first_found;
  Pixel curr = start;
  for (long step = 0;; ++step) {
    if (step > max_steps)
      throw InternalError("contour tracing failed to close");
    // Counterclockwise scan around curr starting just after prev; the scan
    // always terminates because prev itself is foreground.
    const int from = direction_of(curr, prev);
    Pixel next{};
    for (int k = 1; k <= 8; ++k) {
      const int d = (from - k + 16) % 8;
      const Pixel cand{curr.x + kDx[d], curr.y + kDy[d]};
      if (mask.fg(cand.x, cand.y)) {
        next = cand;
        break;
      }
    }
    if (next == start && curr == first_found) break;  // initial edge repeats
    contour.push_back(next);
    prev = curr;
    curr = next;
  }
  return contour;
}

}  // namespace

ConfidentMovingRegion extract_regions(const ForegroundMask& mask, int min_area, int frame_index) {
  if (mask.width < 1 || mask.height < 1 ||
      mask.bits.size() != static_cast<std::size_t>(mask.width) * mask.height)
    throw InputError("extract_regions: malformed mask");

  const MaskView view(mask);
  ConfidentMovingRegion region;
  region.frame_index = frame_index;
  region.source_mask_area = mask.foreground_count();

  // 8-connected component labeling by flood fill in raster order.
  std::vector<std::int32_t> label(mask.bits.size(), 0);
  std::vector<Pixel> stack;
  std::int32_t next_label = 0;

  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      const std::size_t idx = static_cast<std::size_t>(y) * mask.width + x;
      if (mask.bits[idx] == 0 || label[idx] != 0) continue;

      const Pixel seed{x, y};  // raster-first pixel of this component
      ++next_label;
      label[idx] = next_label;
      stack.assign(1, seed);
      int pixel_count = 0;
      while (!stack.empty()) {
        const Pixel p = stack.back();
        stack.pop_back();
        ++pixel_count;
        for (int d = 0; d < 8; ++d) {
          const int nx = p.x + kDx[d], ny = p.y + kDy[d];
          if (!view.fg(nx, ny)) continue;
          const std::size_t nidx = static_cast<std::size_t>(ny) * mask.width + nx;
          if (label[nidx] != 0) continue;
          label[nidx] = next_label;
          stack.push_back({nx, ny});
        }
      }

      if (pixel_count < min_area) continue;

      // every (pixel, entry-direction) state appears at most once in a trace
      const std::vector<Pixel> contour =
          trace_outer_border(view, seed, 8L * pixel_count + 8);
      Polygon poly;
      poly.vertices.reserve(std::max<std::size_t>(contour.size(), 3));
      for (const Pixel& p : contour)
        poly.vertices.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
      while (poly.vertices.size() < 3) poly.vertices.push_back(poly.vertices.back());
      region.polygons.push_back(std::move(poly));
    }
  }
  return region;
}

bool point_in_polygon(double px, double py, const Polygon& polygon) {
  const auto& v = polygon.vertices;
  const std::size_t n = v.size();
  if (n == 0) return false;

  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const double x0 = v[j].x, y0 = v[j].y;
    const double x1 = v[i].x, y1 = v[i].y;

    // Exact on-edge test: collinear and within the segment's bounding box.
    const double cross = (x1 - x0) * (py - y0) - (y1 - y0) * (px - x0);
    if (cross == 0.0 && px >= std::min(x0, x1) && px <= std::max(x0, x1) &&
        py >= std::min(y0, y1) && py <= std::max(y0, y1))
      return true;

    // Ray-crossing parity toward +x with a half-open vertex rule; the
    // division-free form keeps integer-coordinate cases exact.
    if ((y0 > py) != (y1 > py)) {
      const double t = (x1 - x0) * (py - y0) - (px - x0) * (y1 - y0);
      if ((t > 0.0) == (y1 > y0)) inside = !inside;
    }
  }
  return inside;
}

bool point_in_region(double x, double y, const ConfidentMovingRegion& region) {
  for (const Polygon& poly : region.polygons)
    if (point_in_polygon(x, y, poly)) return true;
  return false;
}

}  // namespace trackrect
