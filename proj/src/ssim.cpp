#include "trackrect/ssim.hpp"

#include <cstdint>
#include <vector>

#include "trackrect/errors.hpp"

namespace trackrect {

namespace {

// Summed-area tables of x, y, x^2, y^2 and x*y, with a zero top row and left
// column. 8-bit inputs keep every entry exact in int64.
struct MomentTables {
  int w = 0, h = 0;
  std::vector<std::int64_t> sx, sy, sxx, syy, sxy;

  MomentTables(const GrayFrame& a, const GrayFrame& b)
      : w(a.width()), h(a.height()) {
    const std::size_t n = static_cast<std::size_t>(w + 1) * (h + 1);
    sx.assign(n, 0);
    sy.assign(n, 0);
    sxx.assign(n, 0);
    syy.assign(n, 0);
    sxy.assign(n, 0);
    for (int yy = 0; yy < h; ++yy) {
      std::int64_t rx = 0, ry = 0, rxx = 0, ryy = 0, rxy = 0;
      const std::size_t row = static_cast<std::size_t>(yy + 1) * (w + 1);
      const std::size_t prev = static_cast<std::size_t>(yy) * (w + 1);
      for (int xx = 0; xx < w; ++xx) {
        const std::int64_t va = a.at(xx, yy);
        const std::int64_t vb = b.at(xx, yy);
        rx += va;
        ry += vb;
        rxx += va * va;
        ryy += vb * vb;
        rxy += va * vb;
        sx[row + xx + 1] = sx[prev + xx + 1] + rx;
        sy[row + xx + 1] = sy[prev + xx + 1] + ry;
        sxx[row + xx + 1] = sxx[prev + xx + 1] + rxx;
        syy[row + xx + 1] = syy[prev + xx + 1] + ryy;
        sxy[row + xx + 1] = sxy[prev + xx + 1] + rxy;
      }
    }
  }

  // Sum over the window [x0, x1) x [y0, y1).
  static std::int64_t box(const std::vector<std::int64_t>& t, int stride, int x0, int y0, int x1,
                          int y1) {
    return t[static_cast<std::size_t>(y1) * stride + x1] -
           t[static_cast<std::size_t>(y0) * stride + x1] -
           t[static_cast<std::size_t>(y1) * stride + x0] +
           t[static_cast<std::size_t>(y0) * stride + x0];
  }
};

}  // namespace

double ssim(const GrayFrame& a, const GrayFrame& b, const SsimParams& params) {
  if (a.width() != b.width() || a.height() != b.height())
    throw InputError("ssim: frame dimensions differ");
  if (params.window < 3 || params.window % 2 == 0)
    throw InputError("ssim: window must be odd and >= 3");
  if (a.width() < params.window || a.height() < params.window)
    throw InputError("ssim: frame smaller than the window");
  if (!(params.data_range > 0.0)) throw InputError("ssim: data_range must be > 0");

  const int w = a.width();
  const int h = a.height();
  const int win = params.window;
  const int pad = (win - 1) / 2;
  const double np = static_cast<double>(win) * win;
  const double cov_norm = params.sample_covariance ? np / (np - 1.0) : 1.0;
  const double c1 = (params.k1 * params.data_range) * (params.k1 * params.data_range);
  const double c2 = (params.k2 * params.data_range) * (params.k2 * params.data_range);

  const MomentTables m(a, b);
  const int stride = w + 1;

  double total = 0.0;
  for (int yy = pad; yy < h - pad; ++yy) {
    const int y0 = yy - pad, y1 = yy + pad + 1;
    for (int xx = pad; xx < w - pad; ++xx) {
      const int x0 = xx - pad, x1 = xx + pad + 1;
      const double ux = static_cast<double>(MomentTables::box(m.sx, stride, x0, y0, x1, y1)) / np;
      const double uy = static_cast<double>(MomentTables::box(m.sy, stride, x0, y0, x1, y1)) / np;
      const double uxx = static_cast<double>(MomentTables::box(m.sxx, stride, x0, y0, x1, y1)) / np;
      const double uyy = static_cast<double>(MomentTables::box(m.syy, stride, x0, y0, x1, y1)) / np;
      const double uxy = static_cast<double>(MomentTables::box(m.sxy, stride, x0, y0, x1, y1)) / np;

      const double vx = cov_norm * (uxx - ux * ux);
      const double vy = cov_norm * (uyy - uy * uy);
      const double vxy = cov_norm * (uxy - ux * uy);

      const double a1 = 2.0 * ux * uy + c1;
      const double a2 = 2.0 * vxy + c2;
      const double b1 = ux * ux + uy * uy + c1;
      const double b2 = vx + vy + c2;
      total += (a1 * a2) / (b1 * b2);
    }
  }
  const double count = static_cast<double>(w - 2 * pad) * (h - 2 * pad);
  return total / count;
}

}  // namespace trackrect
