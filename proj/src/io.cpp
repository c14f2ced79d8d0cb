#include "grmat/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace grmat::io {

std::string format_complex(const cplx& z, int significant_digits) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, z.real());
    return buf;
  }
  std::string out;
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, z.real());
  out = buf;
  out += z.imag() < 0 ? "-" : "+";
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, std::abs(z.imag()));
  out += buf;
  out += "i";
  return out;
}

std::string format_complex_machine(const cplx& z) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

cplx parse_complex(const std::string& cell) {
  std::string s;
  for (char c : cell)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw StructureError("empty complex cell");

  auto to_double = [](const std::string& part) {
    if (part == "" || part == "+") return 1.0;
    if (part == "-") return -1.0;
    size_t used = 0;
    double v;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw StructureError("cannot parse number '" + part + "'");
    }
    if (used != part.size()) throw StructureError("cannot parse number '" + part + "'");
    return v;
  };

  if (s.back() != 'i' && s.back() != 'I') return {to_double(s), 0.0};
  std::string body = s.substr(0, s.size() - 1);
  // split before the sign of the imaginary part, skipping exponent signs
  for (size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E')
      return {to_double(body.substr(0, p)), to_double(body.substr(p))};
  }
  return {0.0, to_double(body)};
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

cplx entry_from_json(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  if (e.is_string()) return parse_complex(e.get<std::string>());
  throw StructureError("complex entries must be [re, im] pairs");
}

}  // namespace

Eigen::MatrixXcd matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw StructureError("matrix JSON must be a nonempty array");
  long rows = static_cast<long>(j.size());
  if (!j[0].is_array()) throw StructureError("matrix JSON rows must be arrays");
  long cols = static_cast<long>(j[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<long>(j[i].size()) != cols)
      throw StructureError("matrix JSON rows have inconsistent lengths");
    for (long c = 0; c < cols; ++c) m(i, c) = entry_from_json(j[i][c]);
  }
  return m;
}

json vector_to_json(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (long i = 0; i < v.size(); ++i) out.push_back({v[i].real(), v[i].imag()});
  return out;
}

Eigen::VectorXcd vector_from_json(const json& j) {
  if (!j.is_array()) throw StructureError("vector JSON must be an array");
  Eigen::VectorXcd v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v[static_cast<long>(i)] = entry_from_json(j[i]);
  return v;
}

std::string matrix_to_csv(const Eigen::MatrixXcd& m) {
  std::string out;
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += format_complex_machine(m(i, j));
    }
    out += "\n";
  }
  return out;
}

Eigen::MatrixXcd matrix_from_csv(std::istream& in) {
  std::vector<std::vector<cplx>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<cplx> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(parse_complex(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw StructureError("empty CSV matrix");
  long cols = static_cast<long>(rows[0].size());
  Eigen::MatrixXcd m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<long>(rows[i].size()) != cols)
      throw StructureError("CSV rows have inconsistent lengths");
    for (long j = 0; j < cols; ++j) m(static_cast<long>(i), j) = rows[i][j];
  }
  return m;
}

void print_matrix(std::ostream& out, const Eigen::MatrixXcd& m, int digits) {
  std::vector<std::string> cells(m.rows() * m.cols());
  size_t width = 0;
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) {
      cells[i * m.cols() + j] = format_complex(m(i, j), digits);
      width = std::max(width, cells[i * m.cols() + j].size());
    }
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      out << std::string(width - c.size() + (j ? 2 : 0), ' ') << c;
    }
    out << "\n";
  }
}

json group_to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  j["labels"] = g.labels();
  json table = json::array();
  for (int i = 0; i < g.order(); ++i) {
    json row = json::array();
    for (int k = 0; k < g.order(); ++k) row.push_back(g.mul(i, k));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

GroupPtr group_from_json(const json& j, GroupSpec spec) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw StructureError("group table file needs 'order' and 'table' fields");
  int n = j["order"].get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  auto table = j["table"].get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != n)
    throw StructureError("declared order " + std::to_string(n) + " but the table has " +
                         std::to_string(table.size()) + " rows");
  return FiniteGroup::from_table(table, std::move(labels), std::move(spec), true);
}

GroupPtr load_group_table(const std::string& path) {
  return group_from_json(load_json(path), GroupSpec::table(path));
}

json character_table_to_json(const FiniteGroup& g, const CharacterTable& x) {
  json j;
  json classes = json::array();
  for (int k = 0; k < x.classes.count(); ++k)
    classes.push_back({{"size", x.classes.classes[k].size()},
                       {"representative", g.label(x.classes.representatives[k])}});
  j["classes"] = std::move(classes);
  j["rows"] = matrix_to_json(x.values);
  return j;
}

CharacterTable character_table_from_json(const FiniteGroup& g, const json& j) {
  if (!j.is_object() || !j.contains("classes") || !j.contains("rows"))
    throw StructureError("character table file needs 'classes' and 'rows' fields");
  ConjugacyPartition canonical = conjugacy_classes(g);
  int r = canonical.count();
  if (static_cast<int>(j["classes"].size()) != r)
    throw StructureError("file lists " + std::to_string(j["classes"].size()) +
                         " classes but the group has " + std::to_string(r));

  CharacterTable x;
  x.classes.class_of.assign(g.order(), -1);
  std::vector<char> used(r, 0);
  for (const auto& c : j["classes"]) {
    std::string rep = c.at("representative").get<std::string>();
    auto idx = g.index_of(rep);
    if (!idx) throw StructureError("unknown class representative '" + rep + "'");
    int canon = canonical.class_of[*idx];
    if (used[canon]++)
      throw StructureError("two file classes resolve to the class of '" + rep + "'");
    if (c.at("size").get<int>() != static_cast<int>(canonical.classes[canon].size()))
      throw StructureError("class of '" + rep + "' has size " +
                           std::to_string(canonical.classes[canon].size()) +
                           ", file says " + std::to_string(c.at("size").get<int>()));
    int k = x.classes.count();
    x.classes.classes.push_back(canonical.classes[canon]);
    x.classes.representatives.push_back(*idx);
    for (int e : canonical.classes[canon]) x.classes.class_of[e] = k;
  }
  x.values = matrix_from_json(j["rows"]);
  if (x.values.rows() != r || x.values.cols() != r)
    throw StructureError("character table rows must form an r x r matrix");
  int id_class = x.classes.class_of[g.identity_index()];
  x.degrees.resize(r);
  for (int i = 0; i < r; ++i)
    x.degrees[i] = static_cast<int>(std::round(x.values(i, id_class).real()));

  CharacterTableReport rep = validate_character_table(g, x);
  if (!rep.pass(1e-8))
    throw VerificationError("loaded character table fails validation (worst residual " +
                                std::to_string(rep.max()) + ")",
                            rep.max());
  return x;
}

CharacterTable load_character_table(const GroupPtr& g, const std::string& path) {
  return character_table_from_json(*g, load_json(path));
}

json idempotents_to_json(const FiniteGroup& g, const IdempotentSet& set) {
  json j;
  j["group"] = g.spec().to_string();
  j["ranks"] = set.ranks;
  json elems = json::array();
  for (const auto& e : set.elements) elems.push_back(vector_to_json(e.coeffs));
  j["elements"] = std::move(elems);
  return j;
}

IdempotentSet idempotents_from_json(const GroupPtr& g, const json& j) {
  if (!j.is_object() || !j.contains("elements"))
    throw StructureError("idempotent file needs an 'elements' field");
  IdempotentSet set;
  for (const auto& e : j["elements"]) {
    Eigen::VectorXcd c = vector_from_json(e);
    if (c.size() != g->order())
      throw StructureError("idempotent length " + std::to_string(c.size()) +
                           " does not match group order " + std::to_string(g->order()));
    set.elements.push_back(make_element(g, std::move(c)));
  }
  if (set.elements.empty()) throw StructureError("idempotent file has no elements");
  if (j.contains("ranks")) set.ranks = j["ranks"].get<std::vector<int>>();
  return set;
}

json diagonalizer_to_json(const Diagonalizer& d) {
  json j;
  j["group"] = d.group->spec().to_string();
  j["block_sizes"] = d.block_sizes;
  j["unitary"] = d.unitary;
  j["provenance"] = d.provenance;
  j["p"] = matrix_to_json(d.p);
  return j;
}

Diagonalizer diagonalizer_from_json(const GroupPtr& g, const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("block_sizes"))
    throw StructureError("diagonalizer file needs 'p' and 'block_sizes' fields");
  Diagonalizer d;
  d.group = g;
  d.p = matrix_from_json(j["p"]);
  int n = g->order();
  if (d.p.rows() != n || d.p.cols() != n)
    throw StructureError("basis matrix shape does not match the group order");
  d.block_sizes = j["block_sizes"].get<std::vector<int>>();
  int sum = 0;
  for (int s : d.block_sizes) sum += s;
  if (sum != n) throw StructureError("block sizes do not sum to the group order");
  d.unitary = j.value("unitary", false);
  d.provenance = j.value("provenance", std::string("file"));
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(d.p);
  d.p_inv = lu.inverse();
  double resid =
      max_abs(Eigen::MatrixXcd(d.p * d.p_inv - Eigen::MatrixXcd::Identity(n, n)));
  if (!(resid <= 1e-11))
    throw NumericError("loaded basis matrix is numerically singular (inverse residual " +
                       std::to_string(resid) + ")");
  return d;
}

json block_diagonal_to_json(const BlockDiagonal& b) {
  json j;
  j["offblock_residual"] = b.offblock_residual;
  json blocks = json::array();
  for (const auto& m : b.blocks) blocks.push_back(matrix_to_json(m));
  j["blocks"] = std::move(blocks);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SpecError("cannot open '" + path + "' for writing");
  out << content;
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw SpecError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace grmat::io
