#ifndef TRACKRECT_REGION_HPP
#define TRACKRECT_REGION_HPP

#include <vector>

#include "trackrect/background.hpp"

namespace trackrect {

struct Point2d {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point2d&) const = default;
};

/// Closed polygon over pixel coordinates; the edge from the last vertex back
/// to the first is implicit.
struct Polygon {
  std::vector<Point2d> vertices;
};

/// Per-frame set of motion polygons with point-membership queries.
struct ConfidentMovingRegion {
  int frame_index = 0;
  std::vector<Polygon> polygons;
  int source_mask_area = 0;  // foreground pixel count of the source mask

  bool empty() const { return polygons.empty(); }
};

/// Trace the outer boundaries of the mask's 8-connected foreground
/// components, dropping components with fewer than min_area pixels. Polygon
/// vertices are the border pixel centers in tracing order; interior holes are
/// not represented (a point over a hole tests inside).
ConfidentMovingRegion extract_regions(const ForegroundMask& mask, int min_area,
                                      int frame_index = 0);

/// True iff the point lies strictly inside the polygon by ray-crossing
/// parity, or exactly on an edge (on-edge counts as inside).
bool point_in_polygon(double x, double y, const Polygon& polygon);

/// True iff the point is inside or on the boundary of any polygon.
bool point_in_region(double x, double y, const ConfidentMovingRegion& region);

}  // namespace trackrect

#endif
