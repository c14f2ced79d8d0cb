#include "grmat/group.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "grmat/io.hpp"

namespace grmat {

GroupSpec GroupSpec::cyclic(int n) {
  if (n < 1) throw SpecError("cyclic order must be at least 1, got " + std::to_string(n));
  GroupSpec s;
  s.kind = Kind::Cyclic;
  s.order = n;
  return s;
}

GroupSpec GroupSpec::dihedral(int order2n) {
  if (order2n < 2 || order2n % 2 != 0)
    throw SpecError("dihedral order must be even and at least 2, got " +
                    std::to_string(order2n));
  GroupSpec s;
  s.kind = Kind::Dihedral;
  s.order = order2n;
  return s;
}

GroupSpec GroupSpec::quaternion8() {
  GroupSpec s;
  s.kind = Kind::Quaternion8;
  s.order = 8;
  return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> fs) {
  if (fs.empty()) throw SpecError("product needs at least one factor");
  GroupSpec s;
  s.kind = Kind::Product;
  s.order = 1;
  for (const auto& f : fs) s.order *= f.order;
  s.factors = std::move(fs);
  return s;
}

GroupSpec GroupSpec::table(std::string file) {
  GroupSpec s;
  s.kind = Kind::Table;
  s.order = 0;  // unknown until loaded
  s.path = std::move(file);
  return s;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic:
      return "C" + std::to_string(order);
    case Kind::Dihedral:
      return "D" + std::to_string(order);
    case Kind::Quaternion8:
      return "Q8";
    case Kind::Product: {
      std::string s;
      for (size_t t = 0; t < factors.size(); ++t) {
        if (t) s += "x";
        s += factors[t].to_string();
      }
      return s;
    }
    case Kind::Table:
      return "table:" + path;
  }
  return "?";
}

namespace {

GroupSpec parse_token(const std::string& tok) {
  if (tok == "Q8" || tok == "K8") return GroupSpec::quaternion8();
  if ((tok.size() > 1) && (tok[0] == 'Q' || tok[0] == 'K') &&
      std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(c); }))
    throw SpecError("only the order-8 quaternion group is supported, got " + tok);
  if (tok.size() > 1 && (tok[0] == 'C' || tok[0] == 'D') &&
      std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(c); })) {
    int n = std::stoi(tok.substr(1));
    return tok[0] == 'C' ? GroupSpec::cyclic(n) : GroupSpec::dihedral(n);
  }
  throw SpecError("cannot parse group token '" + tok +
                  "' (expected Cn, Dn, Q8 or table:<path>)");
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw SpecError("empty group spec");
  if (s.rfind("table:", 0) == 0) {
    std::string path = s.substr(6);
    if (path.empty()) throw SpecError("table spec needs a path");
    return GroupSpec::table(path);
  }
  std::vector<GroupSpec> parts;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t x = s.find('x', pos);
    std::string tok = s.substr(pos, x == std::string::npos ? x : x - pos);
    parts.push_back(parse_token(tok));
    if (x == std::string::npos) break;
    pos = x + 1;
  }
  if (parts.size() == 1) return parts[0];
  return GroupSpec::product(std::move(parts));
}

// ---------------------------------------------------------------------------
// construction

namespace {

struct RawGroup {
  std::vector<std::vector<int>> table;
  std::vector<std::string> labels;
};

std::string power_label(const std::string& gen, int k) {
  if (k == 0) return "";
  if (k == 1) return gen;
  return gen + "^" + std::to_string(k);
}

RawGroup make_cyclic(int n, const std::string& gen) {
  RawGroup r;
  r.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.table[i][j] = (i + j) % n;
  r.labels.reserve(n);
  for (int i = 0; i < n; ++i) r.labels.push_back(i == 0 ? "1" : power_label(gen, i));
  return r;
}

// Listing 1, a, ..., a^{n-1}, b, ab, ..., a^{n-1}b with b a^j = a^{-j} b.
RawGroup make_dihedral(int order) {
  int n = order / 2;
  RawGroup r;
  r.table.assign(order, std::vector<int>(order));
  auto idx = [n](int i, int e) { return e * n + ((i % n + n) % n); };
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < n; ++i)
      for (int f = 0; f < 2; ++f)
        for (int j = 0; j < n; ++j)
          r.table[idx(i, e)][idx(j, f)] =
              e == 0 ? idx(i + j, f) : idx(i - j, 1 - f);
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < n; ++i) {
      std::string s = power_label("a", i) + (e ? "b" : "");
      r.labels.push_back(s.empty() ? "1" : s);
    }
  return r;
}

// Listing 1, a, a^2, a^3, b, ab, a^2b, a^3b with a^2 = b^2 and b a = a^{-1} b.
RawGroup make_quaternion8() {
  RawGroup r;
  r.table.assign(8, std::vector<int>(8));
  auto idx = [](int i, int e) { return e * 4 + ((i % 4 + 4) % 4); };
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < 4; ++i)
      for (int f = 0; f < 2; ++f)
        for (int j = 0; j < 4; ++j) {
          int v;
          if (e == 0)
            v = idx(i + j, f);
          else if (f == 0)
            v = idx(i - j, 1);
          else
            v = idx(i - j + 2, 0);  // b^2 = a^2
          r.table[idx(i, e)][idx(j, f)] = v;
        }
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < 4; ++i) {
      std::string s = power_label("a", i) + (e ? "b" : "");
      r.labels.push_back(s.empty() ? "1" : s);
    }
  return r;
}

void flatten_factors(const GroupSpec& spec, std::vector<GroupSpec>& out) {
  if (spec.kind == GroupSpec::Kind::Product)
    for (const auto& f : spec.factors) flatten_factors(f, out);
  else
    out.push_back(spec);
}

const char* kGeneratorLetters[] = {"g", "h", "k", "l", "m", "n", "p", "q", "r", "s"};

// Direct product over the flattened factor list. The first factor varies
// fastest in the listing; labels put later (outer) factors first, so C3xC3
// lists 1, g, g^2, h, hg, hg^2, h^2, h^2g, h^2g^2.
RawGroup make_product(const std::vector<GroupSpec>& flat) {
  std::vector<RawGroup> parts;
  int cyclic_ordinal = 0;
  for (const auto& f : flat) {
    switch (f.kind) {
      case GroupSpec::Kind::Cyclic: {
        const char* gen = cyclic_ordinal < 10 ? kGeneratorLetters[cyclic_ordinal]
                                              : "z";
        std::string name = cyclic_ordinal < 10
                               ? std::string(gen)
                               : "z" + std::to_string(cyclic_ordinal);
        parts.push_back(make_cyclic(f.order, name));
        ++cyclic_ordinal;
        break;
      }
      case GroupSpec::Kind::Dihedral:
        parts.push_back(make_dihedral(f.order));
        break;
      case GroupSpec::Kind::Quaternion8:
        parts.push_back(make_quaternion8());
        break;
      default: {
        // table factors: build and copy
        GroupPtr g = build_group(f);
        RawGroup r;
        int n = g->order();
        r.table.assign(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) r.table[i][j] = g->mul(i, j);
        r.labels = g->labels();
        parts.push_back(std::move(r));
      }
    }
  }
  int m = static_cast<int>(parts.size());
  int total = 1;
  for (const auto& p : parts) total *= static_cast<int>(p.table.size());

  auto decode = [&](int flat_idx) {
    std::vector<int> d(m);
    for (int t = 0; t < m; ++t) {
      int nt = static_cast<int>(parts[t].table.size());
      d[t] = flat_idx % nt;
      flat_idx /= nt;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int v = 0;
    for (int t = m - 1; t >= 0; --t) v = v * static_cast<int>(parts[t].table.size()) + d[t];
    return v;
  };

  RawGroup r;
  r.table.assign(total, std::vector<int>(total));
  for (int i = 0; i < total; ++i) {
    auto di = decode(i);
    for (int j = 0; j < total; ++j) {
      auto dj = decode(j);
      std::vector<int> dk(m);
      for (int t = 0; t < m; ++t) dk[t] = parts[t].table[di[t]][dj[t]];
      r.table[i][j] = encode(dk);
    }
  }
  r.labels.reserve(total);
  for (int i = 0; i < total; ++i) {
    auto d = decode(i);
    std::string s;
    for (int t = m - 1; t >= 0; --t)
      if (d[t] != 0) s += parts[t].labels[d[t]];
    r.labels.push_back(s.empty() ? "1" : s);
  }
  return r;
}

}  // namespace

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                 std::vector<std::string> labels, GroupSpec spec,
                                 bool check_associativity) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw StructureError("group table is empty");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw StructureError("group table is not square at row " + std::to_string(i));
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        throw StructureError("table entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") = " + std::to_string(table[i][j]) + " is out of range");
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : "x" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n)
    throw StructureError("expected " + std::to_string(n) + " labels, got " +
                         std::to_string(labels.size()));
  {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw StructureError("empty element label");
      if (!seen.insert(l).second) throw StructureError("duplicate element label '" + l + "'");
    }
  }
  // identity conventions: the listing starts with the identity
  for (int j = 0; j < n; ++j)
    if (table[0][j] != j)
      throw StructureError("row 0 must be the identity row: table[0][" + std::to_string(j) +
                           "] = " + std::to_string(table[0][j]) + ", expected " +
                           std::to_string(j));
  for (int i = 0; i < n; ++i)
    if (table[i][0] != i)
      throw StructureError("column 0 must be the identity column: table[" + std::to_string(i) +
                           "][0] = " + std::to_string(table[i][0]) + ", expected " +
                           std::to_string(i));
  // Latin square
  for (int i = 0; i < n; ++i) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (row[table[i][j]]++)
        throw StructureError("row " + std::to_string(i) + " repeats element " +
                             std::to_string(table[i][j]) + " ('" + labels[table[i][j]] +
                             "'): not a Latin square");
      if (col[table[j][i]]++)
        throw StructureError("column " + std::to_string(i) + " repeats element " +
                             std::to_string(table[j][i]) + " ('" + labels[table[j][i]] +
                             "'): not a Latin square");
    }
  }
  if (check_associativity) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (table[table[i][j]][k] != table[i][table[j][k]])
            throw StructureError(
                "associativity fails at ('" + labels[i] + "','" + labels[j] + "','" +
                labels[k] + "'): (" + labels[i] + " " + labels[j] + ") " + labels[k] +
                " = " + labels[table[table[i][j]][k]] + " but " + labels[i] + " (" +
                labels[j] + " " + labels[k] + ") = " + labels[table[i][table[j][k]]]);
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g->table_[static_cast<size_t>(i) * n + j] = table[i][j];
  g->labels_ = std::move(labels);
  g->inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table[j][i] == 0) {
        g->inverse_[i] = j;
        break;
      }
  g->abelian_ = true;
  for (int i = 0; i < n && g->abelian_; ++i)
    for (int j = 0; j < i; ++j)
      if (table[i][j] != table[j][i]) {
        g->abelian_ = false;
        break;
      }
  g->spec_ = std::move(spec);
  return g;
}

std::optional<int> FiniteGroup::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return n_ == other.n_ && table_ == other.table_;
}

bool compatible(const GroupPtr& a, const GroupPtr& b) {
  if (!a || !b) return false;
  return a == b || a->same_table(*b);
}

GroupPtr build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: {
      RawGroup r = make_cyclic(spec.order, "g");
      return FiniteGroup::from_table(r.table, std::move(r.labels), spec, false);
    }
    case GroupSpec::Kind::Dihedral: {
      RawGroup r = make_dihedral(spec.order);
      return FiniteGroup::from_table(r.table, std::move(r.labels), spec, false);
    }
    case GroupSpec::Kind::Quaternion8: {
      RawGroup r = make_quaternion8();
      return FiniteGroup::from_table(r.table, std::move(r.labels), spec, false);
    }
    case GroupSpec::Kind::Product: {
      std::vector<GroupSpec> flat;
      flatten_factors(spec, flat);
      GroupSpec canon = GroupSpec::product(flat);
      RawGroup r = make_product(flat);
      return FiniteGroup::from_table(r.table, std::move(r.labels), canon, false);
    }
    case GroupSpec::Kind::Table:
      return io::load_group_table(spec.path);
  }
  throw SpecError("unhandled group spec");
}

GroupPtr build_group(const std::string& spec_text) {
  return build_group(parse_group_spec(spec_text));
}

std::vector<int> ConjugacyPartition::sizes() const {
  std::vector<int> s;
  s.reserve(classes.size());
  for (const auto& c : classes) s.push_back(static_cast<int>(c.size()));
  return s;
}

ConjugacyPartition conjugacy_classes(const FiniteGroup& g) {
  int n = g.order();
  ConjugacyPartition part;
  part.class_of.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    if (part.class_of[e] >= 0) continue;
    std::set<int> cls;
    for (int x = 0; x < n; ++x) cls.insert(g.mul(g.mul(g.inverse(x), e), x));
    int k = part.count();
    std::vector<int> members(cls.begin(), cls.end());
    for (int m : members) part.class_of[m] = k;
    part.representatives.push_back(members.front());
    part.classes.push_back(std::move(members));
  }
  return part;
}

Eigen::MatrixXi group_matrix(const FiniteGroup& g) {
  int n = g.order();
  Eigen::MatrixXi m(n, n);
  for (int i = 0; i < n; ++i) {
    int inv = g.inverse(i);
    for (int j = 0; j < n; ++j) m(i, j) = g.mul(inv, j);
  }
  return m;
}

}  // namespace grmat
