#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "grmat/errors.hpp"

namespace grmat {

/// How a group is specified: a built-in family, a direct product, or an
/// explicit multiplication table loaded from a file.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral, Quaternion8, Product, Table };

  Kind kind = Kind::Cyclic;
  int order = 1;                   ///< cyclic: n; dihedral: the group order 2n
  std::vector<GroupSpec> factors;  ///< Product only
  std::string path;                ///< Table only

  static GroupSpec cyclic(int n);
  static GroupSpec dihedral(int order2n);
  static GroupSpec quaternion8();
  static GroupSpec product(std::vector<GroupSpec> fs);
  static GroupSpec table(std::string file);

  std::string to_string() const;
};

/// Parses spec strings like "C12", "D6", "Q8", "C3xC3", "table:path.json".
GroupSpec parse_group_spec(const std::string& text);

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given concretely by its multiplication table over a fixed
/// listing g_0, g_1, ..., g_{n-1} with g_0 the identity. The listing order is
/// part of the data: permuting it changes every matrix this library builds.
class FiniteGroup {
 public:
  /// Validates and wraps a user-supplied table: identity conventions
  /// (row 0 and column 0 are the listing), the Latin-square property, and,
  /// when requested, full associativity. Built-in constructors skip the
  /// associativity sweep; user tables always get it.
  static GroupPtr from_table(const std::vector<std::vector<int>>& table,
                             std::vector<std::string> labels, GroupSpec spec,
                             bool check_associativity = true);

  int order() const { return n_; }
  int identity_index() const { return 0; }
  int mul(int i, int j) const { return table_[static_cast<size_t>(i) * n_ + j]; }
  int inverse(int i) const { return inverse_[i]; }
  bool abelian() const { return abelian_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(const std::string& label) const;

  const GroupSpec& spec() const { return spec_; }

  /// Structural equality: same order and same multiplication table.
  bool same_table(const FiniteGroup& other) const;

 private:
  FiniteGroup() = default;

  int n_ = 0;
  std::vector<int> table_;  // row-major n*n
  std::vector<std::string> labels_;
  std::vector<int> inverse_;
  bool abelian_ = false;
  GroupSpec spec_;
};

GroupPtr build_group(const GroupSpec& spec);
GroupPtr build_group(const std::string& spec_text);

/// Elements of two handles multiply together only if they share the table.
bool compatible(const GroupPtr& a, const GroupPtr& b);

struct ConjugacyPartition {
  /// Ascending inside each class; classes ordered by their smallest member,
  /// so the identity class is first. Loaders may carry other orders.
  std::vector<std::vector<int>> classes;
  std::vector<int> representatives;  ///< classes[k].front() for canonical order
  std::vector<int> class_of;         ///< element index -> class index
  int count() const { return static_cast<int>(classes.size()); }
  std::vector<int> sizes() const;
};

ConjugacyPartition conjugacy_classes(const FiniteGroup& g);

/// The index matrix with (i,j) entry the listing index of g_i^{-1} g_j.
/// Substituting coefficients through it yields the group ring matrix.
Eigen::MatrixXi group_matrix(const FiniteGroup& g);

}  // namespace grmat
