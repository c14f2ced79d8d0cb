#pragma once

#include "grmat/idempotents.hpp"

namespace grmat {

/// A fixed change of basis that carries every group ring matrix of one group
/// to the same block-diagonal shape. p_inv is computed once and cached; the
/// construction guarantees |p * p_inv - I| <= 1e-11.
struct Diagonalizer {
  GroupPtr group;
  Eigen::MatrixXcd p;
  Eigen::MatrixXcd p_inv;
  std::vector<int> block_sizes;
  bool unitary = false;    ///< p* p = I (orthonormal construction)
  std::string provenance;  ///< how p was built, e.g. "idempotents" or "fourier"
  int size() const { return static_cast<int>(p.rows()); }
};

struct BlockDiagonal {
  std::vector<Eigen::MatrixXcd> blocks;
  double offblock_residual = 0.0;
  Eigen::MatrixXcd assemble() const;
};

/// Greedy left-to-right column selection from an idempotent's matrix image:
/// a column is kept iff it raises the numerical rank at tolerance tol.
/// Kept columns are rescaled by the magnitude of their smallest nonzero entry
/// (first such on ties), which lands integer patterns on integer vectors.
Eigen::MatrixXcd column_basis(const Eigen::MatrixXcd& e, int rank, double tol);

/// Concatenates per-idempotent column bases into the universal block
/// diagonalizer. With orthonormal=true each block is Gram-Schmidt
/// orthonormalized, making p unitary.
Diagonalizer build_diagonalizer(const GroupPtr& g, const IdempotentSet& set,
                                bool orthonormal = false);

/// p^{-1} A p, cut into the diagonalizer's blocks. Off-block mass above tol
/// means A does not carry this group's pattern, and throws.
BlockDiagonal block_transform(const Eigen::MatrixXcd& a, const Diagonalizer& d,
                              double tol = 1e-8);
BlockDiagonal block_transform(const RGMatrix& a, const Diagonalizer& d, double tol = 1e-8);

/// Images of every group element in one block of the transform; the map
/// index -> matrix is a representation of the group.
std::vector<Eigen::MatrixXcd> group_block_representation(const GroupPtr& g,
                                                         const Diagonalizer& d,
                                                         int block_index);

/// Inverse of sum(alpha_i e_i) in the center: sum(alpha_i^{-1} e_i).
/// Any |alpha_i| <= 1e-12 means the element kills e_i and cannot be inverted.
GroupRingElement center_inverse(const std::vector<cplx>& alphas, const IdempotentSet& set);

/// Determinant of sum(alpha_i E_i) from certified ranks: prod alpha_i^{r_i}.
cplx determinant_from_ranks(const std::vector<cplx>& alphas, const std::vector<int>& ranks);

/// Ring product computed in the transform domain: both factors are block
/// transformed, blocks are multiplied pairwise, the result is mapped back and
/// its first row read off as coefficients.
GroupRingElement transform_multiply(const GroupRingElement& w, const GroupRingElement& v,
                                    const Diagonalizer& d);

}  // namespace grmat
