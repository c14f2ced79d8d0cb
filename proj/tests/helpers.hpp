#pragma once

// Shared test utilities. Oracles here are written independently of the
// library internals so golden and property tests mean something.

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "grmat/group.hpp"
#include "grmat/group_ring.hpp"
#include "grmat/types.hpp"

namespace testhelp {

using grmat::cplx;

inline Eigen::MatrixXcd mat(const std::vector<std::vector<cplx>>& rows) {
  Eigen::MatrixXcd m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
  return m;
}

inline Eigen::VectorXcd vec(const std::vector<cplx>& v) {
  Eigen::VectorXcd out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[static_cast<long>(i)] = v[i];
  return out;
}

inline double diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  return (a - b).cwiseAbs().maxCoeff();
}

inline double vdiff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  if (a.size() != b.size()) return 1e300;
  return (a - b).cwiseAbs().maxCoeff();
}

inline Eigen::VectorXcd random_coeffs(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Eigen::VectorXcd c(n);
  for (int i = 0; i < n; ++i) c[i] = cplx(uni(rng), uni(rng));
  return c;
}

inline grmat::GroupRingElement random_element(const grmat::GroupPtr& g,
                                              std::mt19937_64& rng) {
  return grmat::make_element(g, random_coeffs(g->order(), rng));
}

// Oracle: coefficient product in C[x]/(x^n - 1), no group machinery.
inline Eigen::VectorXcd poly_mod_convolve(const Eigen::VectorXcd& a,
                                          const Eigen::VectorXcd& b) {
  int n = static_cast<int>(a.size());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[(i + j) % n] += a[i] * b[j];
  return out;
}

// Oracle: numerical rank from singular values.
inline int svd_rank(const Eigen::MatrixXcd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  int r = 0;
  for (long i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > tol) ++r;
  return r;
}

// Greedy row matching: every row of a must match a distinct row of b.
inline bool rows_match_up_to_permutation(const Eigen::MatrixXcd& a,
                                         const Eigen::MatrixXcd& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::vector<bool> used(b.rows(), false);
  for (long i = 0; i < a.rows(); ++i) {
    bool found = false;
    for (long j = 0; j < b.rows() && !found; ++j) {
      if (used[j]) continue;
      if ((a.row(i) - b.row(j)).cwiseAbs().maxCoeff() <= tol) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace testhelp
