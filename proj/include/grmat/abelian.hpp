#pragma once

#include "grmat/blockdiag.hpp"

namespace grmat {

/// Cyclic factor orders (n_1, ..., n_m) of a finite abelian group. The listing
/// is mixed-radix with the first factor varying fastest, so later factors wrap
/// around blocks of earlier ones.
struct AbelianFactors {
  std::vector<int> orders;
  int total() const;
  int factor_count() const { return static_cast<int>(orders.size()); }
  /// Digits of a flat listing index, innermost factor first.
  std::vector<int> digits(int flat) const;
  int flat(const std::vector<int>& digits) const;
};

/// Extracts factor orders when the spec is cyclic or a product of cyclics.
std::optional<AbelianFactors> abelian_factors_of(const GroupSpec& spec);

/// F(j,k) = w^{jk} for w = exp(2 pi i / n), exponents reduced mod n before
/// the complex exponential.
Eigen::MatrixXcd fourier_matrix(int n);

/// Assembles k equally sized blocks A_0..A_{k-1} into the square-pattern
/// matrix whose (i,j) block is A_{(j-i) mod k}.
Eigen::MatrixXcd block_circulant(const std::vector<Eigen::MatrixXcd>& blocks);

/// The kn x kn matrix whose (j,l) block is w^{jl} P, w = exp(2 pi i / k).
/// This layout, with the new factor outermost, is what the abelian
/// diagonalizer composes; it plays the role of a Fourier-patterned Kronecker
/// product over the block grid.
Eigen::MatrixXcd block_fourier(const Eigen::MatrixXcd& p, int k);

/// Inverse of block_fourier(p, k) assembled directly from p's inverse:
/// the (j,l) block is (1/k) w^{-jl} p_inv.
Eigen::MatrixXcd block_fourier_inverse(const Eigen::MatrixXcd& p_inv, int k);

/// Tensor-Fourier diagonalizer of the product listing: fold block_fourier
/// over the factors, innermost first. All blocks have size 1 and
/// P P* = |G| I, so P/sqrt(|G|) is unitary.
Diagonalizer abelian_diagonalizer(const AbelianFactors& f);

/// Transform-domain values by the multidimensional character sum
/// lambda(j) = sum_i alpha_i prod_t w_t^{i_t j_t}, flat output in listing order.
Eigen::VectorXcd abelian_diagonal(const Eigen::VectorXcd& coeffs, const AbelianFactors& f);
Eigen::VectorXcd abelian_diagonal(const GroupRingElement& w, const AbelianFactors& f);

/// The same values computed factor by factor: the coefficient vector is cut
/// into chunks along the outermost factor, each chunk is transformed
/// recursively, and the chunks are recombined through one root of unity.
Eigen::VectorXcd abelian_diagonal_blocks(const Eigen::VectorXcd& coeffs,
                                         const AbelianFactors& f);

/// Inverse transform: recovers coefficients from transform-domain values.
Eigen::VectorXcd abelian_from_diagonal(const Eigen::VectorXcd& diag, const AbelianFactors& f);

/// Rows of the tensor-Fourier matrix read as characters, with singleton
/// classes labeled by the product listing.
CharacterTable abelian_character_table(const AbelianFactors& f);

struct HadamardReport {
  int n = 0;
  double unimodularity_dev = 0;  // worst | |entry| - 1 |
  double gram_dev = 0;           // worst |(P P* - n I) entry|
  double real_sign_dev = 0;      // worst distance of an entry from real +-1
  bool pass(double tol) const { return unimodularity_dev <= tol && gram_dev <= tol * n; }
};

/// Checks the complex Hadamard property: unimodular entries and P P* = n I.
/// real_sign_dev additionally reports how far entries are from real +-1,
/// which is zero (to rounding) when every factor order is 2.
HadamardReport hadamard_check(const Eigen::MatrixXcd& p);

}  // namespace grmat
