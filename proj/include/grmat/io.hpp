#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "grmat/abelian.hpp"

namespace grmat::io {

using nlohmann::json;

/// "a+bi" with the requested number of significant digits; bare real part
/// when the imaginary part is exactly zero.
std::string format_complex(const cplx& z, int significant_digits);

/// Round-trip faithful "a+bi" (17 significant digits).
std::string format_complex_machine(const cplx& z);

// Complex matrices and vectors. JSON: array of rows, each entry a [re, im]
// pair. CSV: one row per line, cells "re+imi".
json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const json& j);
json vector_to_json(const Eigen::VectorXcd& v);
Eigen::VectorXcd vector_from_json(const json& j);
std::string matrix_to_csv(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_csv(std::istream& in);
cplx parse_complex(const std::string& cell);

void print_matrix(std::ostream& out, const Eigen::MatrixXcd& m, int digits = 12);

// Group tables: {"order": n, "labels": [...], "table": [[...]]}.
json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const json& j, GroupSpec spec);
GroupPtr load_group_table(const std::string& path);

// Character tables:
// {"classes": [{"size": s, "representative": label}, ...], "rows": [...]}.
json character_table_to_json(const FiniteGroup& g, const CharacterTable& x);
CharacterTable character_table_from_json(const FiniteGroup& g, const json& j);
CharacterTable load_character_table(const GroupPtr& g, const std::string& path);

// Idempotent sets: {"group": spec, "ranks": [...], "elements": [vector, ...]}.
json idempotents_to_json(const FiniteGroup& g, const IdempotentSet& set);
IdempotentSet idempotents_from_json(const GroupPtr& g, const json& j);

// Diagonalizers: {"group": spec, "block_sizes": [...], "unitary": b, "p": [...]}.
json diagonalizer_to_json(const Diagonalizer& d);
Diagonalizer diagonalizer_from_json(const GroupPtr& g, const json& j);

json block_diagonal_to_json(const BlockDiagonal& b);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
json load_json(const std::string& path);

}  // namespace grmat::io
