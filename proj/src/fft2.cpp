#include "fusetrack/fft2.hpp"

#include <unsupported/Eigen/FFT>

namespace fusetrack {

namespace {

// Column-then-row 1-D passes. Eigen's FFT works on contiguous vectors, so
// rows go through a temporary.
CPlane transform(const CPlane& in, bool inverse) {
  const Eigen::Index rows = in.rows();
  const Eigen::Index cols = in.cols();
  CPlane out(rows, cols);
  Eigen::FFT<double> fft;

  Eigen::VectorXcd buf(rows), res(rows);
  for (Eigen::Index c = 0; c < cols; ++c) {
    buf = in.col(c).matrix();
    if (inverse)
      fft.inv(res, buf);
    else
      fft.fwd(res, buf);
    out.col(c) = res.array();
  }
  Eigen::VectorXcd rbuf(cols), rres(cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    rbuf = out.row(r).matrix().transpose();
    if (inverse)
      fft.inv(rres, rbuf);
    else
      fft.fwd(rres, rbuf);
    out.row(r) = rres.array().transpose();
  }
  return out;
}

}  // namespace

CPlane fft2(const Plane& in) { return transform(in.cast<std::complex<double>>(), false); }

CPlane fft2(const CPlane& in) { return transform(in, false); }

CPlane ifft2(const CPlane& in) { return transform(in, true); }

Plane ifft2_real(const CPlane& in) { return transform(in, true).real(); }

}  // namespace fusetrack
