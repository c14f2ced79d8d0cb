#pragma once

#include <cstdint>

#include "grmat/group_ring.hpp"

namespace grmat {

/// Irreducible character values on conjugacy classes, together with the class
/// data needed to expand characters over the whole group. Rows are characters,
/// columns follow the partition's class order.
struct CharacterTable {
  ConjugacyPartition classes;
  Eigen::MatrixXcd values;   // r x r
  std::vector<int> degrees;  // values(i, identity class), rounded
  int count() const { return static_cast<int>(degrees.size()); }
};

struct CharacterTableReport {
  double first_row_dev = 0;        // distance of the first row from all-ones
  double orthogonality_dev = 0;    // worst weighted row-orthogonality residual
  double degree_dev = 0;           // worst distance of a degree from a positive integer
  double degree_square_sum_dev = 0;
  double max() const;
  bool pass(double tol) const;
};

CharacterTableReport validate_character_table(const FiniteGroup& g, const CharacterTable& x);

/// Structure constants of the class sums: entry (m,l) of matrix j counts how
/// often class m appears in the product (sum of class j)(sum of class l), so
/// matrix j is left multiplication by class sum j on the class-sum basis.
std::vector<Eigen::MatrixXd> class_sum_matrices(const FiniteGroup& g);
std::vector<Eigen::MatrixXd> class_sum_matrices(const FiniteGroup& g,
                                                const ConjugacyPartition& part);

enum class TableSource { Builtin, Numeric, File };

/// Closed-form tables for the cyclic, dihedral, quaternion and
/// product-of-cyclic families. Rows keep each family's reference order.
CharacterTable builtin_character_table(const GroupPtr& g);

/// Character table from simultaneous eigenvectors of the class-sum matrices.
/// A seeded random combination separates the eigenvalues; degenerate clusters
/// trigger fresh combinations before failing. Rows are sorted by degree, then
/// by character values (rounded to 6 decimals, largest first), which puts the
/// trivial character on top.
CharacterTable numeric_character_table(const GroupPtr& g, std::uint64_t seed = 0);

CharacterTable character_table(const GroupPtr& g, TableSource source,
                               std::uint64_t seed = 0, const std::string& file = {});

/// A complete orthogonal set of central idempotents with certified ranks.
struct IdempotentSet {
  std::vector<GroupRingElement> elements;
  std::vector<int> ranks;
  int count() const { return static_cast<int>(elements.size()); }
};

struct IdempotentReport {
  double idempotency = 0;    // worst |e_i e_i - e_i| coefficient
  double orthogonality = 0;  // worst |e_i e_j| coefficient, i != j
  double completeness = 0;   // |sum e_i - 1|
  double symmetry = 0;       // worst |e_i* - e_i| coefficient
  double max() const;
  bool pass(double tol) const;
};

/// e_i = (d_i/|G|) sum_g conj(chi_i(g)) g, one per table row, in row order.
/// The result is verified (axioms within 1e-9) and rank-certified.
IdempotentSet central_idempotents(const GroupPtr& g, const CharacterTable& x);

IdempotentReport verify_idempotent_set(const IdempotentSet& set);

/// Ranks via the trace rule for idempotent matrices. Each trace must sit
/// within 1e-6 of an integer and the ranks must sum to the group order.
std::vector<int> idempotent_ranks(const IdempotentSet& set);

}  // namespace grmat
