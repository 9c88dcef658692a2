#ifndef TRACKRECT_RECTIFY_HPP
#define TRACKRECT_RECTIFY_HPP

#include <span>
#include <string>
#include <vector>

#include "trackrect/camera_motion.hpp"
#include "trackrect/region.hpp"
#include "trackrect/trajectory.hpp"

namespace trackrect {

/// Correction policy, from no-op to frame-level region gating:
///  - passthrough:   base tracks untouched.
///  - cmd:           every track position replaced by the static baseline.
///  - cmr_global:    tracks that ever enter a moving region are trusted to
///                   the base tracker; all others replaced by the baseline.
///  - cmr_temporary: per frame, positions inside the frame's moving region
///                   are kept, all others snap to the query position.
/// Every mode leaves moving-camera videos untouched and never edits
/// visibility flags.
enum class RectifyMode { passthrough, cmd, cmr_global, cmr_temporary };

const char* to_string(RectifyMode mode);
RectifyMode rectify_mode_from_string(const std::string& name);

/// The trivial tracker: the query position repeated over all frames (in both
/// time directions), all flags visible.
Trajectory static_baseline(const QueryPoint& query, int num_frames);

/// Global-scale criterion: true iff the base prediction lies inside the
/// frame's moving region at any frame. Requires one region per frame.
bool is_moving_point(const Trajectory& traj, std::span<const ConfidentMovingRegion> regions);

/// Apply the correction policy. `regions` must cover every frame when a
/// cmr mode runs on a static-camera video; it may be empty otherwise.
std::vector<Trajectory> rectify_video(const std::vector<Trajectory>& trajectories,
                                      const CameraMotionResult& motion,
                                      std::span<const ConfidentMovingRegion> regions,
                                      RectifyMode mode);

}  // namespace trackrect

#endif
