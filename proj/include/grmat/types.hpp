#pragma once

#include <algorithm>
#include <complex>

#include <Eigen/Dense>

namespace grmat {

using cplx = std::complex<double>;

inline double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Eigen::VectorXcd& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

/// Entry-size-aware tolerance: base * n * max|entry|.
inline double scaled_tol(int n, double max_entry, double base = 1e-9) {
  return base * n * max_entry;
}

}  // namespace grmat
