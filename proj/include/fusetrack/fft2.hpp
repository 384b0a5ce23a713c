#pragma once

#include "fusetrack/types.hpp"

namespace fusetrack {

// Unnormalized 2-D DFT / inverse over dense planes. Any rectangular size.
CPlane fft2(const Plane& in);
CPlane fft2(const CPlane& in);
CPlane ifft2(const CPlane& in);
// Inverse transform of a spectrum known to come from real data; returns the
// real part directly.
Plane ifft2_real(const CPlane& in);

}  // namespace fusetrack
