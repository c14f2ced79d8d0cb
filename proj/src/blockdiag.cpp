#include "grmat/blockdiag.hpp"

#include <cmath>

#include <Eigen/LU>

namespace grmat {

Eigen::MatrixXcd BlockDiagonal::assemble() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.rows());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  int at = 0;
  for (const auto& b : blocks) {
    m.block(at, at, b.rows(), b.cols()) = b;
    at += static_cast<int>(b.rows());
  }
  return m;
}

Eigen::MatrixXcd column_basis(const Eigen::MatrixXcd& e, int rank, double tol) {
  int n = static_cast<int>(e.rows());
  if (e.cols() != n) throw StructureError("column_basis expects a square matrix");
  if (rank < 1 || rank > n) throw StructureError("rank out of range");

  std::vector<int> picked;
  std::vector<Eigen::VectorXcd> ortho;  // running orthonormal basis of the picks
  for (int j = 0; j < n && static_cast<int>(picked.size()) < rank; ++j) {
    Eigen::VectorXcd resid = e.col(j);
    for (const auto& q : ortho) resid -= q.dot(resid) * q;
    double norm = resid.norm();
    if (norm > tol) {
      picked.push_back(j);
      ortho.push_back(resid / norm);
    }
  }
  if (static_cast<int>(picked.size()) < rank)
    throw StructureError("found only " + std::to_string(picked.size()) +
                         " independent columns, expected rank " + std::to_string(rank));

  Eigen::MatrixXcd basis(n, rank);
  for (int c = 0; c < rank; ++c) {
    Eigen::VectorXcd col = e.col(picked[c]);
    // Rescale by the magnitude of the smallest nonzero entry (first on ties);
    // integer-patterned idempotents come out as small integer vectors.
    double smallest = -1;
    for (int i = 0; i < n; ++i) {
      double a = std::abs(col[i]);
      if (a > tol && (smallest < 0 || a < smallest)) smallest = a;
    }
    if (smallest > 0) col /= smallest;
    basis.col(c) = col;
  }
  return basis;
}

Diagonalizer build_diagonalizer(const GroupPtr& g, const IdempotentSet& set,
                                bool orthonormal) {
  IdempotentReport rep = verify_idempotent_set(set);
  if (!rep.pass(1e-8))
    throw VerificationError("idempotent set fails its axioms (worst residual " +
                                std::to_string(rep.max()) + ")",
                            rep.max());
  std::vector<int> ranks = set.ranks.empty() ? idempotent_ranks(set) : set.ranks;

  int n = g->order();
  Eigen::MatrixXcd p(n, n);
  int at = 0;
  for (int i = 0; i < set.count(); ++i) {
    Eigen::MatrixXcd e = sigma(set.elements[i]).entries;
    double tol = scaled_tol(n, max_abs(e));
    Eigen::MatrixXcd cols = column_basis(e, ranks[i], tol);
    if (orthonormal) {
      // Gram-Schmidt inside the block; blocks of distinct idempotents are
      // already orthogonal because e_i e_j* vanishes.
      for (int c = 0; c < cols.cols(); ++c) {
        Eigen::VectorXcd v = cols.col(c);
        for (int b = 0; b < c; ++b) {
          Eigen::VectorXcd q = cols.col(b);
          v -= q.dot(v) * q;
        }
        double norm = v.norm();
        if (norm <= tol)
          throw StructureError("orthonormalization collapsed a basis column");
        cols.col(c) = v / norm;
      }
    }
    p.middleCols(at, ranks[i]) = cols;
    at += ranks[i];
  }
  if (at != n)
    throw StructureError("ranks sum to " + std::to_string(at) + ", expected " +
                         std::to_string(n));

  Diagonalizer d;
  d.group = g;
  d.p = std::move(p);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(d.p);
  d.p_inv = lu.inverse();
  double resid = max_abs(Eigen::MatrixXcd(d.p * d.p_inv - Eigen::MatrixXcd::Identity(n, n)));
  if (!(resid <= 1e-11))
    throw NumericError("basis matrix is numerically singular (inverse residual " +
                       std::to_string(resid) + ")");
  d.block_sizes = ranks;
  d.unitary = orthonormal;
  if (orthonormal) {
    double udev = max_abs(
        Eigen::MatrixXcd(d.p.adjoint() * d.p - Eigen::MatrixXcd::Identity(n, n)));
    if (!(udev <= 1e-10))
      throw NumericError("orthonormal basis failed the unitarity check (residual " +
                         std::to_string(udev) + ")");
  }
  d.provenance = orthonormal ? "idempotents:orthonormal" : "idempotents";
  return d;
}

BlockDiagonal block_transform(const Eigen::MatrixXcd& a, const Diagonalizer& d, double tol) {
  int n = d.size();
  if (a.rows() != n || a.cols() != n)
    throw StructureError("matrix size does not match the diagonalizer");
  Eigen::MatrixXcd t = d.p_inv * a * d.p;
  BlockDiagonal out;
  out.blocks.reserve(d.block_sizes.size());
  int at = 0;
  for (int s : d.block_sizes) {
    out.blocks.push_back(t.block(at, at, s, s));
    at += s;
  }
  // everything outside the blocks must vanish
  at = 0;
  double off = 0;
  for (int s : d.block_sizes) {
    for (int i = 0; i < n; ++i)
      for (int j = at; j < at + s; ++j) {
        if (i >= at && i < at + s) continue;
        off = std::max(off, std::abs(t(i, j)));
      }
    at += s;
  }
  out.offblock_residual = off;
  if (off > tol)
    throw StructureError("off-block residual " + std::to_string(off) + " exceeds " +
                         std::to_string(tol) +
                         ": the matrix does not carry this group's pattern");
  return out;
}

BlockDiagonal block_transform(const RGMatrix& a, const Diagonalizer& d, double tol) {
  if (!compatible(a.group, d.group))
    throw StructureError("matrix and diagonalizer belong to different groups");
  return block_transform(a.entries, d, tol);
}

std::vector<Eigen::MatrixXcd> group_block_representation(const GroupPtr& g,
                                                         const Diagonalizer& d,
                                                         int block_index) {
  if (block_index < 0 || block_index >= static_cast<int>(d.block_sizes.size()))
    throw StructureError("block index out of range");
  std::vector<Eigen::MatrixXcd> images;
  images.reserve(g->order());
  for (int e = 0; e < g->order(); ++e) {
    BlockDiagonal b = block_transform(sigma(basis_element(g, e)).entries, d);
    images.push_back(std::move(b.blocks[block_index]));
  }
  return images;
}

GroupRingElement center_inverse(const std::vector<cplx>& alphas, const IdempotentSet& set) {
  if (static_cast<int>(alphas.size()) != set.count())
    throw StructureError("need one coefficient per idempotent");
  for (size_t i = 0; i < alphas.size(); ++i)
    if (std::abs(alphas[i]) <= 1e-12)
      throw ZeroDivisorError("coefficient " + std::to_string(i) +
                             " vanishes: the element annihilates an idempotent, so it is a "
                             "zero divisor with no inverse");
  GroupRingElement out = zero_element(set.elements.front().group);
  for (size_t i = 0; i < alphas.size(); ++i)
    out = out + scale(1.0 / alphas[i], set.elements[i]);
  return out;
}

cplx determinant_from_ranks(const std::vector<cplx>& alphas, const std::vector<int>& ranks) {
  if (alphas.size() != ranks.size())
    throw StructureError("need one coefficient per rank");
  cplx det = 1.0;
  for (size_t i = 0; i < alphas.size(); ++i)
    for (int k = 0; k < ranks[i]; ++k) det *= alphas[i];
  return det;
}

GroupRingElement transform_multiply(const GroupRingElement& w, const GroupRingElement& v,
                                    const Diagonalizer& d) {
  if (!compatible(w.group, d.group) || !compatible(v.group, d.group))
    throw StructureError("transform_multiply: elements and diagonalizer disagree on the group");
  BlockDiagonal bw = block_transform(sigma(w).entries, d);
  BlockDiagonal bv = block_transform(sigma(v).entries, d);
  BlockDiagonal prod;
  prod.blocks.reserve(bw.blocks.size());
  for (size_t i = 0; i < bw.blocks.size(); ++i)
    prod.blocks.push_back(bw.blocks[i] * bv.blocks[i]);
  Eigen::MatrixXcd m = d.p * prod.assemble() * d.p_inv;
  // row 0 of a group ring matrix is its coefficient vector
  return make_element(w.group, m.row(0).transpose());
}

}  // namespace grmat
