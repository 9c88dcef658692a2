#include "trackrect/background.hpp"

#include <algorithm>
#include <cmath>

#include "trackrect/errors.hpp"

namespace trackrect {

namespace {

void validate(const BgConfig& cfg) {
  if (cfg.history < 1) throw InputError("bg config: history must be >= 1");
  if (!(cfg.var_threshold_bg > 0.0) || !(cfg.var_threshold_gen > 0.0))
    throw InputError("bg config: Mahalanobis thresholds must be > 0");
  if (!(cfg.background_ratio > 0.0 && cfg.background_ratio <= 1.0))
    throw InputError("bg config: background_ratio must lie in (0,1]");
  if (cfg.ct < 0.0 || cfg.ct >= 1.0) throw InputError("bg config: ct must lie in [0,1)");
  if (cfg.max_components < 1) throw InputError("bg config: max_components must be >= 1");
  if (!(cfg.var_min > 0.0) || !(cfg.var_min <= cfg.var_init) || !(cfg.var_init <= cfg.var_max))
    throw InputError("bg config: need 0 < var_min <= var_init <= var_max");
}

}  // namespace

int ForegroundMask::foreground_count() const {
  int count = 0;
  for (std::uint8_t b : bits) count += b != 0;
  return count;
}

BackgroundModel::BackgroundModel(int width, int height, const BgConfig& cfg)
    : width_(width), height_(height), cfg_(cfg),
      pixels_(static_cast<std::size_t>(width) * height) {
  validate(cfg_);
  for (auto& p : pixels_) p.components.reserve(cfg_.max_components);
}

BackgroundModel bg_init(const GrayFrame& first_frame, const BgConfig& cfg) {
  BackgroundModel model(first_frame.width(), first_frame.height(), cfg);
  for (int y = 0; y < first_frame.height(); ++y)
    for (int x = 0; x < first_frame.width(); ++x)
      model.pixel(x, y).components.push_back(
          {1.0, static_cast<double>(first_frame.at(x, y)), cfg.var_init});
  return model;
}

bool classify_pixel(const PixelModel& pixel, double value, const BgConfig& cfg) {
  double cumulative = 0.0;
  for (const GaussianComponent& c : pixel.components) {
    const double d = value - c.mean;
    if (d * d < cfg.var_threshold_bg * c.var) return false;  // background
    cumulative += c.weight;
    if (cumulative > cfg.background_ratio) break;  // end of the background set
  }
  return true;  // foreground
}

namespace {

void update_pixel(PixelModel& pixel, double value, const BgConfig& cfg) {
  auto& comps = pixel.components;
  const double alpha = cfg.alpha();
  const double prune = alpha * cfg.ct;

  // Ownership: the closest component (squared Mahalanobis) below the
  // generation threshold.
  int owner = -1;
  double best_dist = cfg.var_threshold_gen;
  for (int m = 0; m < static_cast<int>(comps.size()); ++m) {
    const double d = value - comps[m].mean;
    const double dist = d * d / comps[m].var;
    if (dist < best_dist) {
      best_dist = dist;
      owner = m;
    }
  }

  // Weight update for every component, data updates for the owner only.
  for (int m = 0; m < static_cast<int>(comps.size()); ++m) {
    GaussianComponent& c = comps[m];
    const double o = (m == owner) ? 1.0 : 0.0;
    c.weight += alpha * (o - c.weight) - prune;
    if (m == owner && c.weight > 0.0) {
      const double k = alpha / c.weight;
      const double d = value - c.mean;
      c.mean += k * d;
      c.var = std::clamp(c.var + k * (d * d - c.var), cfg.var_min, cfg.var_max);
    }
  }

  // Prune exhausted components.
  std::erase_if(comps, [](const GaussianComponent& c) { return c.weight <= 0.0; });

  // No owner: insert a fresh component, evicting the weakest at capacity.
  if (owner < 0) {
    if (static_cast<int>(comps.size()) == cfg.max_components) comps.pop_back();
    comps.push_back({alpha, value, cfg.var_init});
  }

  double total = 0.0;
  for (const GaussianComponent& c : comps) total += c.weight;
  for (GaussianComponent& c : comps) c.weight /= total;

  std::stable_sort(comps.begin(), comps.end(),
                   [](const GaussianComponent& a, const GaussianComponent& b) {
                     return a.weight > b.weight;
                   });
}

}  // namespace

ForegroundMask bg_update(BackgroundModel& model, const GrayFrame& frame) {
  if (frame.width() != model.width() || frame.height() != model.height())
    throw InputError("bg_update: frame dimensions differ from the model");

  const BgConfig& cfg = model.config();
  ForegroundMask mask{frame.width(), frame.height(),
                      std::vector<std::uint8_t>(frame.data().size(), 0)};

  for (int y = 0; y < frame.height(); ++y) {
    for (int x = 0; x < frame.width(); ++x) {
      PixelModel& pixel = model.pixel(x, y);
      const double value = frame.at(x, y);
      mask.bits[static_cast<std::size_t>(y) * frame.width() + x] =
          classify_pixel(pixel, value, cfg) ? 1 : 0;
      update_pixel(pixel, value, cfg);
    }
  }
  return mask;
}

}  // namespace trackrect
