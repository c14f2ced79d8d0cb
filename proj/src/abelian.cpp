#include "grmat/abelian.hpp"

#include <cmath>
#include <numbers>

namespace grmat {

namespace {

// w^e for w = exp(2 pi i / n), exponent reduced mod n first so large products
// of indices never reach the trig call.
cplx root_power(int n, long long e) {
  long long m = e % n;
  if (m < 0) m += n;
  double t = 2.0 * std::numbers::pi * double(m) / double(n);
  return {std::cos(t), std::sin(t)};
}

}  // namespace

int AbelianFactors::total() const {
  int q = 1;
  for (int n : orders) q *= n;
  return q;
}

std::vector<int> AbelianFactors::digits(int flat) const {
  std::vector<int> d(orders.size());
  for (size_t t = 0; t < orders.size(); ++t) {
    d[t] = flat % orders[t];
    flat /= orders[t];
  }
  return d;
}

int AbelianFactors::flat(const std::vector<int>& digits) const {
  int v = 0;
  for (size_t t = orders.size(); t-- > 0;) v = v * orders[t] + digits[t];
  return v;
}

std::optional<AbelianFactors> abelian_factors_of(const GroupSpec& spec) {
  AbelianFactors f;
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      f.orders = {spec.order};
      return f;
    case GroupSpec::Kind::Product:
      for (const auto& part : spec.factors) {
        auto sub = abelian_factors_of(part);
        if (!sub) return std::nullopt;
        f.orders.insert(f.orders.end(), sub->orders.begin(), sub->orders.end());
      }
      return f;
    default:
      return std::nullopt;
  }
}

Eigen::MatrixXcd fourier_matrix(int n) {
  if (n < 1) throw SpecError("fourier_matrix needs n >= 1");
  Eigen::MatrixXcd f(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) f(j, k) = root_power(n, 1LL * j * k);
  return f;
}

Eigen::MatrixXcd block_circulant(const std::vector<Eigen::MatrixXcd>& blocks) {
  if (blocks.empty()) throw StructureError("block_circulant needs at least one block");
  int k = static_cast<int>(blocks.size());
  long rows = blocks[0].rows(), cols = blocks[0].cols();
  for (const auto& b : blocks)
    if (b.rows() != rows || b.cols() != cols)
      throw StructureError("block_circulant blocks must share one shape");
  Eigen::MatrixXcd m(k * rows, k * cols);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.block(i * rows, j * cols, rows, cols) = blocks[(j - i + k) % k];
  return m;
}

Eigen::MatrixXcd block_fourier(const Eigen::MatrixXcd& p, int k) {
  if (k < 1) throw SpecError("block_fourier needs k >= 1");
  long n = p.rows();
  Eigen::MatrixXcd q(k * n, k * p.cols());
  for (int j = 0; j < k; ++j)
    for (int l = 0; l < k; ++l)
      q.block(j * n, l * p.cols(), n, p.cols()) = root_power(k, 1LL * j * l) * p;
  return q;
}

Eigen::MatrixXcd block_fourier_inverse(const Eigen::MatrixXcd& p_inv, int k) {
  if (k < 1) throw SpecError("block_fourier_inverse needs k >= 1");
  long n = p_inv.rows();
  Eigen::MatrixXcd q(k * n, k * p_inv.cols());
  for (int j = 0; j < k; ++j)
    for (int l = 0; l < k; ++l)
      q.block(j * n, l * p_inv.cols(), n, p_inv.cols()) =
          (root_power(k, -1LL * j * l) / double(k)) * p_inv;
  return q;
}

Diagonalizer abelian_diagonalizer(const AbelianFactors& f) {
  if (f.orders.empty()) throw SpecError("no factors");
  for (int n : f.orders)
    if (n < 1) throw SpecError("factor orders must be >= 1");
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Ones(1, 1);
  for (int n : f.orders) p = block_fourier(p, n);  // innermost factor first

  int q = f.total();
  Diagonalizer d;
  std::vector<GroupSpec> parts;
  parts.reserve(f.orders.size());
  for (int n : f.orders) parts.push_back(GroupSpec::cyclic(n));
  d.group = build_group(parts.size() == 1 ? parts[0] : GroupSpec::product(parts));
  d.p = std::move(p);
  // P P* = qI exactly, up to rounding in the unit roots.
  d.p_inv = d.p.adjoint() / double(q);
  double resid =
      max_abs(Eigen::MatrixXcd(d.p * d.p_inv - Eigen::MatrixXcd::Identity(q, q)));
  if (!(resid <= 1e-11))
    throw NumericError("transform inverse residual " + std::to_string(resid));
  d.block_sizes.assign(q, 1);
  d.unitary = false;
  d.provenance = "fourier";
  return d;
}

Eigen::VectorXcd abelian_diagonal(const Eigen::VectorXcd& coeffs, const AbelianFactors& f) {
  int q = f.total();
  if (coeffs.size() != q)
    throw StructureError("coefficient vector length does not match the factor orders");
  int m = f.factor_count();
  std::vector<std::vector<int>> digit(q);
  for (int i = 0; i < q; ++i) digit[i] = f.digits(i);
  Eigen::VectorXcd out(q);
  for (int j = 0; j < q; ++j) {
    cplx acc = 0;
    for (int i = 0; i < q; ++i) {
      cplx w = coeffs[i];
      if (w == 0.0) continue;
      for (int t = 0; t < m; ++t)
        w *= root_power(f.orders[t], 1LL * digit[i][t] * digit[j][t]);
      acc += w;
    }
    out[j] = acc;
  }
  return out;
}

Eigen::VectorXcd abelian_diagonal(const GroupRingElement& w, const AbelianFactors& f) {
  auto wf = abelian_factors_of(w.group->spec());
  if (wf && wf->orders != f.orders)
    throw StructureError("element group factors do not match the requested factors");
  return abelian_diagonal(w.coeffs, f);
}

Eigen::VectorXcd abelian_diagonal_blocks(const Eigen::VectorXcd& coeffs,
                                         const AbelianFactors& f) {
  int q = f.total();
  if (coeffs.size() != q)
    throw StructureError("coefficient vector length does not match the factor orders");
  if (f.orders.empty()) return coeffs;
  // Cut along the outermost factor, transform each chunk over the inner
  // factors, then mix the chunk diagonals with one root of unity.
  int k = f.orders.back();
  AbelianFactors inner{std::vector<int>(f.orders.begin(), f.orders.end() - 1)};
  int chunk = q / k;
  std::vector<Eigen::VectorXcd> ds;
  ds.reserve(k);
  for (int i = 0; i < k; ++i)
    ds.push_back(inner.orders.empty()
                     ? coeffs.segment(i * chunk, chunk)
                     : abelian_diagonal_blocks(coeffs.segment(i * chunk, chunk), inner));
  Eigen::VectorXcd out(q);
  for (int j = 0; j < k; ++j) {
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(chunk);
    for (int i = 0; i < k; ++i) acc += root_power(k, 1LL * i * j) * ds[i];
    out.segment(j * chunk, chunk) = acc;
  }
  return out;
}

Eigen::VectorXcd abelian_from_diagonal(const Eigen::VectorXcd& diag, const AbelianFactors& f) {
  int q = f.total();
  if (diag.size() != q) throw StructureError("diagonal length does not match the factors");
  int m = f.factor_count();
  std::vector<std::vector<int>> digit(q);
  for (int i = 0; i < q; ++i) digit[i] = f.digits(i);
  Eigen::VectorXcd out(q);
  for (int i = 0; i < q; ++i) {
    cplx acc = 0;
    for (int j = 0; j < q; ++j) {
      cplx w = diag[j];
      for (int t = 0; t < m; ++t)
        w *= root_power(f.orders[t], -1LL * digit[i][t] * digit[j][t]);
      acc += w;
    }
    out[i] = acc / double(q);
  }
  return out;
}

CharacterTable abelian_character_table(const AbelianFactors& f) {
  int q = f.total();
  CharacterTable x;
  x.classes.classes.reserve(q);
  for (int i = 0; i < q; ++i) {
    x.classes.classes.push_back({i});
    x.classes.representatives.push_back(i);
    x.classes.class_of.push_back(i);
  }
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Ones(1, 1);
  for (int n : f.orders) p = block_fourier(p, n);
  x.values = std::move(p);
  x.degrees.assign(q, 1);
  return x;
}

HadamardReport hadamard_check(const Eigen::MatrixXcd& p) {
  if (p.rows() != p.cols()) throw StructureError("hadamard_check expects a square matrix");
  HadamardReport r;
  r.n = static_cast<int>(p.rows());
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j) {
      const cplx& z = p(i, j);
      r.unimodularity_dev = std::max(r.unimodularity_dev, std::abs(std::abs(z) - 1.0));
      r.real_sign_dev = std::max(
          r.real_sign_dev, std::max(std::abs(z.imag()), std::abs(std::abs(z.real()) - 1.0)));
    }
  r.gram_dev = max_abs(Eigen::MatrixXcd(
      p * p.adjoint() - double(r.n) * Eigen::MatrixXcd::Identity(r.n, r.n)));
  return r;
}

}  // namespace grmat
