#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fusetrack/image.hpp"
#include "fusetrack/types.hpp"

namespace fusetrack {

// Cell-resolution multichannel feature planes.
struct FeatureMap {
  std::vector<Plane> channels;
  int cell_size = 4;

  int width() const { return channels.empty() ? 0 : static_cast<int>(channels[0].cols()); }
  int height() const { return channels.empty() ? 0 : static_cast<int>(channels[0].rows()); }
  int num_channels() const { return static_cast<int>(channels.size()); }
  bool same_shape(const FeatureMap& o) const {
    return width() == o.width() && height() == o.height() &&
           num_channels() == o.num_channels();
  }
  bool finite() const;
  double squared_norm() const;
};

// 32x32x32 RGB -> 2 channel lookup table (color-name approximation).
class CnLut {
 public:
  static constexpr int kBins = 32;
  static constexpr int kEntries = kBins * kBins * kBins;

  // Loads the binary table: magic "CNL1" + 32768 x 2 little-endian floats.
  static std::shared_ptr<const CnLut> load(const std::string& path);

  // r,g,b in [0,255].
  double lookup(int r, int g, int b, int channel) const {
    const int idx = ((r >> 3) * kBins + (g >> 3)) * kBins + (b >> 3);
    return table_[idx * 2 + channel];
  }

 private:
  std::vector<float> table_;
};

inline constexpr int kHogBins = 9;
inline constexpr int kCnChannels = 2;

struct FeatureConfig {
  int cell_size = 4;
  double padding = 2.5;
  std::shared_ptr<const CnLut> cn_lut;  // null -> CN channels stay zero
};

// Core extraction: samples `window_px` from the image (bilinear, border
// replicated), resamples to out_w x out_h pixels, then produces 9 oriented
// gradient channels plus 2 CN channels at cell resolution, each multiplied by
// a Hann taper. Gradients come from the luminance plane (central
// differences); CN values are cell means from the lookup table. Grayscale
// input leaves the CN channels at zero.
FeatureMap extract_window_features(const Image& img, const RectF& window_px,
                                   int out_w, int out_h, const FeatureConfig& cfg);

// Convenience form matching the tracker's use: the window is the bounding
// box inflated by cfg.padding, resampled to its scale-1 raster.
FeatureMap extract_features(const Image& img, const struct BoundingBox& box,
                            const FeatureConfig& cfg);

Plane hann_window(int rows, int cols);

}  // namespace fusetrack
