#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusetrack/types.hpp"

namespace fusetrack {

// 8-bit raster, row-major, interleaved channels (1 = grayscale, 3 = RGB).
struct Image {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> data;

  Image() = default;
  Image(int w, int h, int c, std::uint8_t fill = 0)
      : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * h * c, fill) {}

  std::uint8_t& at(int x, int y, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t at(int x, int y, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  // Border-replicated access.
  std::uint8_t at_clamped(int x, int y, int c) const;

  bool empty() const { return width == 0 || height == 0; }
};

// Axis-aligned rectangle in pixel coordinates (center-based).
struct RectF {
  double cx = 0, cy = 0, w = 0, h = 0;
  double left() const { return cx - w / 2.0; }
  double right() const { return cx + w / 2.0; }
  double top() const { return cy - h / 2.0; }
  double bottom() const { return cy + h / 2.0; }
};

bool rect_intersects_image(const RectF& r, const Image& img);

// Samples `src_rect` from the image with bilinear interpolation and border
// replication, resampled onto an `out_w` x `out_h` grid. One plane per
// channel, values scaled to [0, 1].
std::vector<Plane> sample_window(const Image& img, const RectF& src_rect,
                                 int out_w, int out_h);

// Luminance plane in [0, 1] of a sampled window (Rec.601 weights for RGB).
Plane sample_window_gray(const Image& img, const RectF& src_rect, int out_w,
                         int out_h);

Plane to_gray(const Image& img);

}  // namespace fusetrack
