#pragma once

#include <optional>

#include "grmat/group.hpp"
#include "grmat/types.hpp"

namespace grmat {

/// An element of the complex group ring: one coefficient per listing entry.
struct GroupRingElement {
  GroupPtr group;
  Eigen::VectorXcd coeffs;
};

/// The matrix image of a group ring element: entry (i,j) carries the
/// coefficient attached to g_i^{-1} g_j. Row 0 is the coefficient vector.
struct RGMatrix {
  GroupPtr group;
  Eigen::MatrixXcd entries;
};

GroupRingElement zero_element(const GroupPtr& g);
GroupRingElement identity_element(const GroupPtr& g);
GroupRingElement basis_element(const GroupPtr& g, int index);
GroupRingElement make_element(GroupPtr g, Eigen::VectorXcd coeffs);

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement subtract(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement scale(const cplx& s, const GroupRingElement& a);

/// Ring product by direct convolution over the multiplication table, O(n^2).
/// This is the reference product; transform-based multiplication is checked
/// against it.
GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b);

/// The involution sending sum(a_g g) to sum(conj(a_g) g^{-1}). Its matrix
/// image is the conjugate transpose of the element's image.
GroupRingElement involution(const GroupRingElement& a);

RGMatrix sigma(const GroupRingElement& w);

/// Recovers the defining element if every entry of A agrees with the pattern
/// dictated by its first row, within tol. Default tol: 1e-9 * n * max|entry|.
std::optional<GroupRingElement> is_rg_matrix(const GroupPtr& g, const Eigen::MatrixXcd& a,
                                             double tol);
std::optional<GroupRingElement> is_rg_matrix(const GroupPtr& g, const Eigen::MatrixXcd& a);

inline GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  return add(a, b);
}
inline GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  return subtract(a, b);
}
inline GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  return ring_multiply(a, b);
}
inline GroupRingElement operator*(const cplx& s, const GroupRingElement& a) {
  return scale(s, a);
}

}  // namespace grmat
