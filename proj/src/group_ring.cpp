#include "grmat/group_ring.hpp"

namespace grmat {

namespace {

void require_compatible(const GroupRingElement& a, const GroupRingElement& b,
                        const char* op) {
  if (!compatible(a.group, b.group))
    throw StructureError(std::string(op) + ": elements live over different groups");
}

}  // namespace

GroupRingElement zero_element(const GroupPtr& g) {
  return {g, Eigen::VectorXcd::Zero(g->order())};
}

GroupRingElement identity_element(const GroupPtr& g) {
  return basis_element(g, g->identity_index());
}

GroupRingElement basis_element(const GroupPtr& g, int index) {
  if (index < 0 || index >= g->order())
    throw StructureError("basis element index " + std::to_string(index) + " out of range");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(g->order());
  c[index] = 1.0;
  return {g, std::move(c)};
}

GroupRingElement make_element(GroupPtr g, Eigen::VectorXcd coeffs) {
  if (coeffs.size() != g->order())
    throw StructureError("coefficient vector length " + std::to_string(coeffs.size()) +
                         " does not match group order " + std::to_string(g->order()));
  return {std::move(g), std::move(coeffs)};
}

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b) {
  require_compatible(a, b, "add");
  return {a.group, a.coeffs + b.coeffs};
}

GroupRingElement subtract(const GroupRingElement& a, const GroupRingElement& b) {
  require_compatible(a, b, "subtract");
  return {a.group, a.coeffs - b.coeffs};
}

GroupRingElement scale(const cplx& s, const GroupRingElement& a) {
  return {a.group, s * a.coeffs};
}

GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b) {
  require_compatible(a, b, "ring_multiply");
  const FiniteGroup& g = *a.group;
  int n = g.order();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < n; ++i) {
    cplx ai = a.coeffs[i];
    if (ai == 0.0) continue;
    for (int j = 0; j < n; ++j) out[g.mul(i, j)] += ai * b.coeffs[j];
  }
  return {a.group, std::move(out)};
}

GroupRingElement involution(const GroupRingElement& a) {
  const FiniteGroup& g = *a.group;
  int n = g.order();
  Eigen::VectorXcd out(n);
  for (int i = 0; i < n; ++i) out[i] = std::conj(a.coeffs[g.inverse(i)]);
  return {a.group, std::move(out)};
}

RGMatrix sigma(const GroupRingElement& w) {
  const FiniteGroup& g = *w.group;
  int n = g.order();
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    int inv = g.inverse(i);
    for (int j = 0; j < n; ++j) m(i, j) = w.coeffs[g.mul(inv, j)];
  }
  return {w.group, std::move(m)};
}

std::optional<GroupRingElement> is_rg_matrix(const GroupPtr& g, const Eigen::MatrixXcd& a,
                                             double tol) {
  int n = g->order();
  if (a.rows() != n || a.cols() != n)
    throw StructureError("matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " but the group has order " +
                         std::to_string(n));
  // Row 0 is indexed by g_0^{-1} g_j = g_j, so it is the candidate coefficient
  // vector; every other entry must repeat it through the index pattern.
  Eigen::VectorXcd coeffs = a.row(0).transpose();
  for (int i = 1; i < n; ++i) {
    int inv = g->inverse(i);
    for (int j = 0; j < n; ++j)
      if (std::abs(a(i, j) - coeffs[g->mul(inv, j)]) > tol) return std::nullopt;
  }
  return make_element(g, std::move(coeffs));
}

std::optional<GroupRingElement> is_rg_matrix(const GroupPtr& g, const Eigen::MatrixXcd& a) {
  return is_rg_matrix(g, a, scaled_tol(g->order(), max_abs(a)));
}

}  // namespace grmat
