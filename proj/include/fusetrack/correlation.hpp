#pragma once

#include "fusetrack/features.hpp"
#include "fusetrack/types.hpp"

namespace fusetrack {

enum class KernelFamily { kLinear, kGaussian };

struct KernelParams {
  KernelFamily family = KernelFamily::kGaussian;
  double sigma = 0.5;  // bandwidth for the Gaussian family
};

// Learned correlation filter: dual coefficients in the Fourier domain plus
// the appearance template they were trained against.
struct FilterModel {
  CPlane alpha_hat;
  FeatureMap template_map;
  CPlane label_hat;
  double lambda = 1e-4;
  KernelParams kernel;
  double learning_rate = 0.02;

  int width() const { return static_cast<int>(alpha_hat.cols()); }
  int height() const { return static_cast<int>(alpha_hat.rows()); }
};

struct ResponseMap {
  Plane values;
  double peak_value = 0;  // |y_max|
  int peak_w = 0, peak_h = 0;
  double refined_w = 0, refined_h = 0;  // sub-cell peak (quadratic fit)
  double energy = 0;
  double pce = 0;
};

// Periodic 2-D Gaussian with its peak at the (0,0) bin.
Plane gaussian_label(int rows, int cols, double sigma);

// Kernel correlation k^{ab}(tau) between two feature maps, evaluated for all
// cyclic shifts via the DFT. Linear: channel-summed cross-correlation divided
// by the element count. Gaussian: exp(-max(0, 2 - 2*corr)/sigma^2) on
// unit-normalized maps; an all-zero operand yields an all-zero correlation.
Plane kernel_correlation(const FeatureMap& a, const FeatureMap& b, const KernelParams& k);

FilterModel train_filter(const FeatureMap& features, double lambda, double output_sigma,
                         const KernelParams& kernel = {}, double learning_rate = 0.02);

// Response of the filter on a new feature map; fills peak statistics, energy
// and PCE. Throws DimensionMismatch when the shapes disagree and
// AllZeroResponse when the response carries no energy.
ResponseMap detect(const FilterModel& model, const FeatureMap& features);

// |y_max|^2 / sum |y|^2. Throws AllZeroResponse on an all-zero map.
double compute_pce(const Plane& response);

}  // namespace fusetrack
