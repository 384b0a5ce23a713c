#include "fusetrack/features.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

#include "fusetrack/camera.hpp"
#include "fusetrack/errors.hpp"

namespace fusetrack {

bool FeatureMap::finite() const {
  for (const auto& ch : channels)
    if (!ch.isFinite().all()) return false;
  return true;
}

double FeatureMap::squared_norm() const {
  double s = 0;
  for (const auto& ch : channels) s += ch.square().sum();
  return s;
}

std::shared_ptr<const CnLut> CnLut::load(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw IoError("cn lut: cannot open " + path);
  char magic[4];
  auto lut = std::make_shared<CnLut>();
  lut->table_.resize(kEntries * 2);
  const bool ok = std::fread(magic, 1, 4, f) == 4 && std::memcmp(magic, "CNL1", 4) == 0 &&
                  std::fread(lut->table_.data(), sizeof(float), lut->table_.size(), f) ==
                      lut->table_.size();
  std::fclose(f);
  if (!ok) throw IoError("cn lut: bad format in " + path);
  return lut;
}

Plane hann_window(int rows, int cols) {
  auto axis = [](int n) {
    Eigen::ArrayXd w(n);
    if (n == 1) {
      w[0] = 1.0;
      return w;
    }
    for (int i = 0; i < n; ++i) w[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * i / (n - 1)));
    return w;
  };
  const Eigen::ArrayXd wr = axis(rows);
  const Eigen::ArrayXd wc = axis(cols);
  Plane out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out(r, c) = wr[r] * wc[c];
  return out;
}

FeatureMap extract_window_features(const Image& img, const RectF& window_px,
                                   int out_w, int out_h, const FeatureConfig& cfg) {
  if (img.empty()) throw EmptyIntersection("extract_features: empty image");
  const int cell = cfg.cell_size;
  const int cells_w = out_w / cell;
  const int cells_h = out_h / cell;
  if (cells_w < 1 || cells_h < 1)
    throw EmptyIntersection("extract_features: window smaller than one cell");

  const auto planes = sample_window(img, window_px, out_w, out_h);
  const bool color = planes.size() == 3;
  Plane gray =
      color ? Plane(0.299 * planes[0] + 0.587 * planes[1] + 0.114 * planes[2]) : planes[0];

  FeatureMap fm;
  fm.cell_size = cell;
  fm.channels.assign(kHogBins + kCnChannels, Plane::Zero(cells_h, cells_w));

  // Oriented gradient histogram: central differences on the luminance plane
  // (window border replicated), magnitude votes split linearly between the
  // two nearest bins. Bin centers sit at k*pi/9.
  const double bin_width = kPi / kHogBins;
  const double inv_cell_area = 1.0 / (cell * cell);
  for (int y = 0; y < out_h; ++y) {
    const int ym = y > 0 ? y - 1 : 0;
    const int yp = y < out_h - 1 ? y + 1 : out_h - 1;
    for (int x = 0; x < out_w; ++x) {
      const int xm = x > 0 ? x - 1 : 0;
      const int xp = x < out_w - 1 ? x + 1 : out_w - 1;
      const double gx = 0.5 * (gray(y, xp) - gray(y, xm));
      const double gy = 0.5 * (gray(yp, x) - gray(ym, x));
      const double mag = std::hypot(gx, gy);
      if (mag == 0.0) continue;
      double theta = std::atan2(gy, gx);
      if (theta < 0) theta += kPi;
      if (theta >= kPi) theta -= kPi;
      const double pos = theta / bin_width;
      int b0 = static_cast<int>(std::floor(pos));
      const double frac = pos - b0;
      b0 %= kHogBins;
      const int b1 = (b0 + 1) % kHogBins;
      const int cr = y / cell;
      const int cc = x / cell;
      fm.channels[b0](cr, cc) += (1.0 - frac) * mag * inv_cell_area;
      fm.channels[b1](cr, cc) += frac * mag * inv_cell_area;
    }
  }

  // CN channels: cell means of the table values. Zero for grayscale input or
  // when no table is configured.
  if (color && cfg.cn_lut) {
    for (int y = 0; y < out_h; ++y)
      for (int x = 0; x < out_w; ++x) {
        const int r = static_cast<int>(std::round(planes[0](y, x) * 255.0));
        const int g = static_cast<int>(std::round(planes[1](y, x) * 255.0));
        const int b = static_cast<int>(std::round(planes[2](y, x) * 255.0));
        const int cr = y / cell;
        const int cc = x / cell;
        for (int ch = 0; ch < kCnChannels; ++ch)
          fm.channels[kHogBins + ch](cr, cc) +=
              cfg.cn_lut->lookup(r, g, b, ch) * inv_cell_area;
      }
  }

  const Plane taper = hann_window(cells_h, cells_w);
  for (auto& ch : fm.channels) ch *= taper;
  return fm;
}

FeatureMap extract_features(const Image& img, const BoundingBox& box,
                            const FeatureConfig& cfg) {
  if (!(box.width > 0) || !(box.height > 0) || !(box.scale > 0))
    throw EmptyIntersection("extract_features: degenerate box");
  if (!rect_intersects_image({box.center_u, box.center_v, box.width, box.height}, img))
    throw EmptyIntersection("extract_features: box does not intersect the image");

  // Scale-1 raster: the padded window of the initial box size, rounded to
  // whole cells. The source rect scales with the box so one output pixel
  // always covers `scale` image pixels.
  const int cell = cfg.cell_size;
  auto to_cells = [cell](double px) {
    return std::max(cell, static_cast<int>(std::ceil(px / cell)) * cell);
  };
  const int out_w = to_cells(box.width / box.scale * cfg.padding);
  const int out_h = to_cells(box.height / box.scale * cfg.padding);
  RectF window{box.center_u, box.center_v, out_w * box.scale, out_h * box.scale};
  return extract_window_features(img, window, out_w, out_h, cfg);
}

}  // namespace fusetrack
