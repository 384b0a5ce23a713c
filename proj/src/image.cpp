#include "fusetrack/image.hpp"

#include <algorithm>
#include <cmath>

namespace fusetrack {

std::uint8_t Image::at_clamped(int x, int y, int c) const {
  x = std::clamp(x, 0, width - 1);
  y = std::clamp(y, 0, height - 1);
  return at(x, y, c);
}

bool rect_intersects_image(const RectF& r, const Image& img) {
  return r.right() > 0 && r.left() < img.width && r.bottom() > 0 &&
         r.top() < img.height && r.w > 0 && r.h > 0;
}

namespace {

inline double bilinear(const Image& img, double x, double y, int c) {
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const double fx = x - x0;
  const double fy = y - y0;
  const double v00 = img.at_clamped(x0, y0, c);
  const double v10 = img.at_clamped(x0 + 1, y0, c);
  const double v01 = img.at_clamped(x0, y0 + 1, c);
  const double v11 = img.at_clamped(x0 + 1, y0 + 1, c);
  return (1 - fy) * ((1 - fx) * v00 + fx * v10) + fy * ((1 - fx) * v01 + fx * v11);
}

}  // namespace

std::vector<Plane> sample_window(const Image& img, const RectF& src_rect,
                                 int out_w, int out_h) {
  std::vector<Plane> planes(img.channels, Plane(out_h, out_w));
  const double sx = src_rect.w / out_w;
  const double sy = src_rect.h / out_h;
  for (int r = 0; r < out_h; ++r) {
    // Sample at destination pixel centers mapped into the source rect.
    const double y = src_rect.top() + (r + 0.5) * sy - 0.5;
    for (int c = 0; c < out_w; ++c) {
      const double x = src_rect.left() + (c + 0.5) * sx - 0.5;
      for (int ch = 0; ch < img.channels; ++ch)
        planes[ch](r, c) = bilinear(img, x, y, ch) / 255.0;
    }
  }
  return planes;
}

Plane sample_window_gray(const Image& img, const RectF& src_rect, int out_w,
                         int out_h) {
  auto planes = sample_window(img, src_rect, out_w, out_h);
  if (planes.size() == 1) return planes[0];
  return 0.299 * planes[0] + 0.587 * planes[1] + 0.114 * planes[2];
}

Plane to_gray(const Image& img) {
  Plane out(img.height, img.width);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      if (img.channels == 1) {
        out(y, x) = img.at(x, y, 0) / 255.0;
      } else {
        out(y, x) = (0.299 * img.at(x, y, 0) + 0.587 * img.at(x, y, 1) +
                     0.114 * img.at(x, y, 2)) /
                    255.0;
      }
    }
  return out;
}

}  // namespace fusetrack
