// Command-line front end: construction, verification, transformation and
// convolution as reproducible batch commands. Machine output (json/csv) is
// byte-identical across reruns with the same inputs and seed.
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "grmat/abelian.hpp"
#include "grmat/blockdiag.hpp"
#include "grmat/errors.hpp"
#include "grmat/group.hpp"
#include "grmat/group_ring.hpp"
#include "grmat/idempotents.hpp"
#include "grmat/io.hpp"

namespace {

using namespace grmat;
using io::json;

struct Options {
  std::string group_spec;
  std::string format = "pretty";
  std::string output;
  std::string source = "builtin";
  std::string table_path;
  std::string method = "auto";
  std::string element;
  std::string input;
  std::string left, right;
  double tol = -1.0;  // negative: use the per-operation default
  std::uint64_t seed = 0;
  bool orthonormal = false;
  int block = -1;  // rep: -1 selects the last (largest) block
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    io::write_file(opt.output, text);
    std::cerr << "wrote " << opt.output << "\n";
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

TableSource parse_source(const Options& opt) {
  if (opt.source == "builtin") return TableSource::Builtin;
  if (opt.source == "numeric") return TableSource::Numeric;
  if (opt.source == "file") {
    if (opt.table_path.empty())
      throw SpecError("--source file needs --table <path>");
    return TableSource::File;
  }
  throw SpecError("unknown --source '" + opt.source + "' (builtin|numeric|file)");
}

CharacterTable make_table(const GroupPtr& g, const Options& opt) {
  return character_table(g, parse_source(opt), opt.seed, opt.table_path);
}

Diagonalizer make_diagonalizer(const GroupPtr& g, const Options& opt) {
  bool abelian_family = abelian_factors_of(g->spec()).has_value();
  bool fourier = opt.method == "fourier" ||
                 (opt.method == "auto" && abelian_family && !opt.orthonormal);
  if (opt.method != "auto" && opt.method != "fourier" && opt.method != "idempotent")
    throw SpecError("unknown --method '" + opt.method + "' (auto|idempotent|fourier)");
  if (fourier) {
    auto f = abelian_factors_of(g->spec());
    if (!f)
      throw SpecError("the fourier construction needs a product-of-cyclics spec such as C6 or C2xC4");
    if (opt.orthonormal)
      throw SpecError("the fourier construction is not orthonormal; use --method idempotent with --orthonormal");
    return abelian_diagonalizer(*f);
  }
  IdempotentSet set = central_idempotents(g, make_table(g, opt));
  return build_diagonalizer(g, set, opt.orthonormal);
}

Eigen::MatrixXcd load_matrix(const std::string& path) {
  std::string text = io::read_file(path);
  size_t at = text.find_first_not_of(" \t\r\n");
  if (at != std::string::npos && (text[at] == '[' || text[at] == '{')) {
    json j = io::load_json(path);
    if (j.is_object() && j.contains("p")) return io::matrix_from_json(j["p"]);
    return io::matrix_from_json(j);
  }
  std::istringstream in(text);
  return io::matrix_from_csv(in);
}

Eigen::VectorXcd load_vector(const std::string& path) {
  std::string text = io::read_file(path);
  size_t at = text.find_first_not_of(" \t\r\n");
  if (at != std::string::npos && (text[at] == '[' || text[at] == '{')) {
    json j = io::load_json(path);
    if (j.is_object() && j.contains("coeffs")) return io::vector_from_json(j["coeffs"]);
    return io::vector_from_json(j);
  }
  std::istringstream in(text);
  Eigen::MatrixXcd m = io::matrix_from_csv(in);
  if (m.rows() == 1) return m.row(0).transpose();
  if (m.cols() == 1) return m.col(0);
  throw StructureError("expected a single-row or single-column coefficient list");
}

GroupRingElement element_from_label(const GroupPtr& g, const std::string& label) {
  auto idx = g->index_of(label);
  if (!idx) throw SpecError("no element named '" + label + "' in " + g->spec().to_string());
  return basis_element(g, *idx);
}

std::string pretty_vector(const GroupPtr& g, const Eigen::VectorXcd& v) {
  size_t width = 0;
  for (int i = 0; i < g->order(); ++i) width = std::max(width, g->label(i).size());
  std::ostringstream out;
  for (int i = 0; i < g->order(); ++i) {
    std::string lab = g->label(i);
    out << lab << std::string(width - lab.size() + 2, ' ')
        << io::format_complex(v[i], 12) << "\n";
  }
  return out.str();
}

std::string csv_vector(const Eigen::VectorXcd& v) {
  std::string out;
  for (long i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += io::format_complex_machine(v[i]);
  }
  return out + "\n";
}

int cmd_group(const Options& opt) {
  GroupPtr g = build_group(opt.group_spec);
  if (!opt.element.empty()) {
    Eigen::MatrixXcd m = sigma(element_from_label(g, opt.element)).entries;
    if (opt.format == "json") emit(opt, dump(io::matrix_to_json(m)));
    else if (opt.format == "csv") emit(opt, io::matrix_to_csv(m));
    else {
      std::ostringstream out;
      out << "sigma(" << opt.element << ") over " << g->spec().to_string() << ":\n";
      io::print_matrix(out, m);
      emit(opt, out.str());
    }
    return 0;
  }
  if (opt.format == "json") {
    emit(opt, dump(io::group_to_json(*g)));
  } else if (opt.format == "csv") {
    std::string out;
    for (int i = 0; i < g->order(); ++i) {
      for (int j = 0; j < g->order(); ++j) {
        if (j) out += ",";
        out += std::to_string(g->mul(i, j));
      }
      out += "\n";
    }
    emit(opt, out);
  } else {
    std::ostringstream out;
    out << "group " << g->spec().to_string() << " of order " << g->order()
        << (g->abelian() ? " (abelian)" : "") << "\n";
    out << "elements:";
    for (const auto& lab : g->labels()) out << " " << lab;
    out << "\n";
    ConjugacyPartition part = conjugacy_classes(*g);
    out << "conjugacy classes:";
    for (const auto& cls : part.classes) {
      out << " {";
      bool first = true;
      for (int e : cls) {
        if (!first) out << ", ";
        out << g->label(e);
        first = false;
      }
      out << "}";
    }
    out << "\n";
    size_t width = 0;
    for (const auto& lab : g->labels()) width = std::max(width, lab.size());
    for (int i = 0; i < g->order(); ++i) {
      for (int j = 0; j < g->order(); ++j) {
        std::string lab = g->label(g->mul(i, j));
        out << (j ? "  " : "") << lab << std::string(width - lab.size(), ' ');
      }
      out << "\n";
    }
    emit(opt, out.str());
  }
  return 0;
}

int cmd_chartable(const Options& opt) {
  GroupPtr g = build_group(opt.group_spec);
  CharacterTable x = make_table(g, opt);
  if (opt.format == "json") {
    emit(opt, dump(io::character_table_to_json(*g, x)));
  } else if (opt.format == "csv") {
    emit(opt, io::matrix_to_csv(x.values));
  } else {
    std::ostringstream out;
    int r = x.count();
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"class"};
    for (int k = 0; k < r; ++k) header.push_back(g->label(x.classes.representatives[k]));
    cells.push_back(header);
    std::vector<std::string> sizes{"size"};
    for (int k = 0; k < r; ++k)
      sizes.push_back(std::to_string(x.classes.classes[k].size()));
    cells.push_back(sizes);
    for (int i = 0; i < r; ++i) {
      std::vector<std::string> row{"chi_" + std::to_string(i)};
      for (int k = 0; k < r; ++k)
        row.push_back(io::format_complex(x.values(i, k), 12));
      cells.push_back(std::move(row));
    }
    std::vector<size_t> width(r + 1, 0);
    for (const auto& row : cells)
      for (int c = 0; c <= r; ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
      for (int c = 0; c <= r; ++c)
        out << (c ? "  " : "") << row[c]
            << std::string(width[c] - row[c].size(), ' ');
      out << "\n";
    }
    emit(opt, out.str());
  }
  return 0;
}

int cmd_idempotents(const Options& opt) {
  GroupPtr g = build_group(opt.group_spec);
  IdempotentSet set = central_idempotents(g, make_table(g, opt));
  if (opt.format == "json") {
    emit(opt, dump(io::idempotents_to_json(*g, set)));
  } else if (opt.format == "csv") {
    Eigen::MatrixXcd m(set.count(), g->order());
    for (int i = 0; i < set.count(); ++i) m.row(i) = set.elements[i].coeffs.transpose();
    emit(opt, io::matrix_to_csv(m));
  } else {
    std::ostringstream out;
    for (int i = 0; i < set.count(); ++i) {
      out << "e_" << i << " (rank " << set.ranks[i] << "):\n";
      out << pretty_vector(g, set.elements[i].coeffs);
    }
    IdempotentReport rep = verify_idempotent_set(set);
    out << "worst axiom deviation: " << io::format_complex(rep.max(), 12) << "\n";
    emit(opt, out.str());
  }
  return 0;
}

int cmd_diagonalizer(const Options& opt) {
  GroupPtr g = build_group(opt.group_spec);
  Diagonalizer d = make_diagonalizer(g, opt);
  if (opt.format == "json") {
    json j = io::diagonalizer_to_json(d);
    if (d.provenance == "fourier") {
      HadamardReport h = hadamard_check(d.p);
      j["hadamard"] = {{"unimodularity_dev", h.unimodularity_dev},
                       {"gram_dev", h.gram_dev},
                       {"real_sign_dev", h.real_sign_dev}};
    }
    emit(opt, dump(j));
  } else if (opt.format == "csv") {
    emit(opt, io::matrix_to_csv(d.p));
  } else {
    std::ostringstream out;
    out << "diagonalizer for " << g->spec().to_string() << " (" << d.provenance << ")\n";
    out << "block sizes:";
    for (int s : d.block_sizes) out << " " << s;
    out << "\nunitary: " << (d.unitary ? "yes" : "no") << "\nP =\n";
    io::print_matrix(out, d.p);
    if (d.provenance == "fourier") {
      HadamardReport h = hadamard_check(d.p);
      out << "PP* = " << d.size() << "I deviation: "
          << io::format_complex(h.gram_dev, 12) << "\n";
      out << "entry modulus deviation: "
          << io::format_complex(h.unimodularity_dev, 12) << "\n";
    }
    emit(opt, out.str());
  }
  return 0;
}

int cmd_transform(const Options& opt) {
  GroupPtr g = build_group(opt.group_spec);
  Diagonalizer d = make_diagonalizer(g, opt);
  double tol = opt.tol >= 0 ? opt.tol : 1e-8;
  BlockDiagonal b;
  if (!opt.element.empty()) {
    b = block_transform(sigma(element_from_label(g, opt.element)), d, tol);
  } else if (!opt.input.empty()) {
    b = block_transform(load_matrix(opt.input), d, tol);
  } else {
    throw SpecError("transform needs --element <label> or --input <matrix file>");
  }
  if (opt.format == "json") {
    json j = io::block_diagonal_to_json(b);
    j["block_sizes"] = d.block_sizes;
    emit(opt, dump(j));
  } else if (opt.format == "csv") {
    emit(opt, io::matrix_to_csv(b.assemble()));
  } else {
    std::ostringstream out;
    out << "block sizes:";
    for (const auto& t : b.blocks) out << " " << t.rows();
    out << "\noff-block residual: " << io::format_complex(b.offblock_residual, 12)
        << "\n";
    for (size_t i = 0; i < b.blocks.size(); ++i) {
      out << "T_" << i << " =\n";
      io::print_matrix(out, b.blocks[i]);
    }
    emit(opt, out.str());
  }
  return 0;
}

int cmd_convolve(const Options& opt) {
  GroupPtr g = build_group(opt.group_spec);
  GroupRingElement w = make_element(g, load_vector(opt.left));
  GroupRingElement v = make_element(g, load_vector(opt.right));
  auto factors = abelian_factors_of(g->spec());
  std::string method = opt.method;
  if (method == "auto") method = factors ? "fourier" : "direct";
  GroupRingElement product = [&] {
    if (method == "direct") return ring_multiply(w, v);
    if (method == "fourier") {
      if (!factors)
        throw SpecError("the fourier convolution route needs a product-of-cyclics spec");
      Eigen::VectorXcd dw = abelian_diagonal(w, *factors);
      Eigen::VectorXcd dv = abelian_diagonal(v, *factors);
      return make_element(g, abelian_from_diagonal(dw.cwiseProduct(dv), *factors));
    }
    if (method == "transform") {
      Options diag_opt = opt;
      diag_opt.method = "auto";
      return transform_multiply(w, v, make_diagonalizer(g, diag_opt));
    }
    throw SpecError("unknown --method '" + opt.method + "' (auto|direct|transform|fourier)");
  }();
  if (opt.format == "json") emit(opt, dump(io::vector_to_json(product.coeffs)));
  else if (opt.format == "csv") emit(opt, csv_vector(product.coeffs));
  else emit(opt, pretty_vector(g, product.coeffs));
  return 0;
}

int cmd_rep(const Options& opt) {
  GroupPtr g = build_group(opt.group_spec);
  Diagonalizer d = make_diagonalizer(g, opt);
  int nb = static_cast<int>(d.block_sizes.size());
  int block = opt.block < 0 ? nb - 1 : opt.block;
  if (block >= nb)
    throw SpecError("block index " + std::to_string(block) + " out of range (0.." +
                    std::to_string(nb - 1) + ")");
  auto images = group_block_representation(g, d, block);
  if (opt.format == "csv")
    throw SpecError("csv output is not defined for rep; use json or pretty");
  if (opt.format == "json") {
    json j;
    j["block"] = block;
    j["size"] = d.block_sizes[block];
    json arr = json::array();
    for (int i = 0; i < g->order(); ++i)
      arr.push_back({{"element", g->label(i)},
                     {"matrix", io::matrix_to_json(images[i])}});
    j["images"] = std::move(arr);
    emit(opt, dump(j));
  } else {
    std::ostringstream out;
    out << "block " << block << " (size " << d.block_sizes[block] << ") representation of "
        << g->spec().to_string() << ":\n";
    for (int i = 0; i < g->order(); ++i) {
      out << g->label(i) << " ->\n";
      io::print_matrix(out, images[i]);
    }
    emit(opt, out.str());
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  GroupPtr g = build_group(opt.group_spec);
  std::string text = io::read_file(opt.input);
  size_t at = text.find_first_not_of(" \t\r\n");
  bool is_json = at != std::string::npos && (text[at] == '[' || text[at] == '{');
  std::ostringstream out;
  bool pass = true;
  double tol;

  if (is_json) {
    json j = io::load_json(opt.input);
    if (j.is_object() && j.contains("elements")) {
      IdempotentSet set = io::idempotents_from_json(g, j);
      IdempotentReport rep = verify_idempotent_set(set);
      tol = opt.tol >= 0 ? opt.tol : 1e-9;
      out << "idempotent set with " << set.count() << " elements\n";
      out << "idempotency deviation:  " << io::format_complex(rep.idempotency, 12) << "\n";
      out << "orthogonality deviation: " << io::format_complex(rep.orthogonality, 12) << "\n";
      out << "completeness deviation: " << io::format_complex(rep.completeness, 12) << "\n";
      out << "symmetry deviation:     " << io::format_complex(rep.symmetry, 12) << "\n";
      pass = rep.pass(tol);
      if (pass) {
        std::vector<int> ranks = idempotent_ranks(set);
        if (!set.ranks.empty() && set.ranks != ranks) {
          out << "stored ranks do not match trace ranks\n";
          pass = false;
        } else {
          out << "ranks:";
          for (int r : ranks) out << " " << r;
          out << "\n";
        }
      }
    } else if (j.is_object() && j.contains("p")) {
      Diagonalizer d = io::diagonalizer_from_json(g, j);
      tol = opt.tol >= 0 ? opt.tol : 1e-9;
      out << "diagonalizer with block sizes:";
      for (int s : d.block_sizes) out << " " << s;
      out << "\n";
      std::mt19937_64 rng(opt.seed);
      std::uniform_real_distribution<double> uni(-1.0, 1.0);
      double worst = 0.0;
      for (int trial = 0; trial < 20; ++trial) {
        Eigen::VectorXcd c(g->order());
        for (int i = 0; i < g->order(); ++i) c[i] = cplx(uni(rng), uni(rng));
        BlockDiagonal b = block_transform(sigma(make_element(g, c)), d, 1.0);
        worst = std::max(worst, b.offblock_residual);
      }
      out << "worst off-block residual over 20 random elements: "
          << io::format_complex(worst, 12) << "\n";
      pass = worst <= tol;
    } else if (j.is_object() && j.contains("rows") && j.contains("classes")) {
      CharacterTable x = io::character_table_from_json(*g, j);
      CharacterTableReport rep = validate_character_table(*g, x);
      tol = opt.tol >= 0 ? opt.tol : 1e-8;
      out << "character table with " << x.count() << " classes\n";
      out << "first row deviation:    " << io::format_complex(rep.first_row_dev, 12) << "\n";
      out << "orthogonality deviation: " << io::format_complex(rep.orthogonality_dev, 12) << "\n";
      out << "degree deviation:       " << io::format_complex(rep.degree_dev, 12) << "\n";
      out << "degree square sum:      " << io::format_complex(rep.degree_square_sum_dev, 12) << "\n";
      pass = rep.pass(tol);
    } else if (j.is_object() && j.contains("table")) {
      GroupPtr loaded = io::group_from_json(j, GroupSpec::table(opt.input));
      out << "group table of order " << loaded->order() << " is a valid group\n";
      if (!compatible(g, loaded)) {
        out << "table does not match " << g->spec().to_string() << "\n";
        pass = false;
      }
    } else if (j.is_array()) {
      Eigen::MatrixXcd m = io::matrix_from_json(j);
      auto w = opt.tol >= 0 ? is_rg_matrix(g, m, opt.tol) : is_rg_matrix(g, m);
      if (w) {
        out << "matrix carries the " << g->spec().to_string() << " pattern; first row:\n";
        out << pretty_vector(g, w->coeffs);
      } else {
        out << "matrix does not carry the " << g->spec().to_string() << " pattern\n";
        pass = false;
      }
    } else {
      throw SpecError("unrecognized artifact in '" + opt.input + "'");
    }
  } else {
    std::istringstream in(text);
    Eigen::MatrixXcd m = io::matrix_from_csv(in);
    auto w = opt.tol >= 0 ? is_rg_matrix(g, m, opt.tol) : is_rg_matrix(g, m);
    if (w) {
      out << "matrix carries the " << g->spec().to_string() << " pattern; first row:\n";
      out << pretty_vector(g, w->coeffs);
    } else {
      out << "matrix does not carry the " << g->spec().to_string() << " pattern\n";
      pass = false;
    }
  }

  out << (pass ? "PASS" : "FAIL") << "\n";
  if (pass) {
    emit(opt, out.str());
    return 0;
  }
  std::cerr << out.str();
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group ring matrices: block diagonalization and convolution"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_source) {
    sub->add_option("spec", opt.group_spec,
                    "group spec: C12, D6, Q8, C3xC3, table:<path>")
        ->required();
    sub->add_option("--format", opt.format, "output format (pretty|json|csv)")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    sub->add_option("--output", opt.output, "write output to a file instead of stdout");
    if (with_source) {
      sub->add_option("--source", opt.source,
                      "character table source (builtin|numeric|file)");
      sub->add_option("--table", opt.table_path, "character table file for --source file");
      sub->add_option("--seed", opt.seed, "seed for the numeric character table");
    }
  };

  auto* c_group = app.add_subcommand("group", "emit a group's table, labels and classes");
  add_common(c_group, false);
  c_group->add_option("--element", opt.element, "emit this element's group ring matrix");

  auto* c_chart = app.add_subcommand("chartable", "emit a character table");
  add_common(c_chart, true);

  auto* c_idem = app.add_subcommand("idempotents",
                                    "emit the complete orthogonal central idempotent set");
  add_common(c_idem, true);

  auto* c_diag = app.add_subcommand("diagonalizer", "emit the universal block diagonalizer");
  add_common(c_diag, true);
  c_diag->add_flag("--orthonormal", opt.orthonormal, "orthonormalize the column bases");
  c_diag->add_option("--method", opt.method, "construction (auto|idempotent|fourier)");

  auto* c_trans = app.add_subcommand("transform", "block-diagonalize a group ring matrix");
  add_common(c_trans, true);
  c_trans->add_option("--element", opt.element, "transform this element's matrix");
  c_trans->add_option("--input", opt.input, "matrix file (json or csv) to transform");
  c_trans->add_option("--tol", opt.tol, "off-block residual tolerance (default 1e-8)");
  c_trans->add_flag("--orthonormal", opt.orthonormal, "orthonormalize the column bases");
  c_trans->add_option("--method", opt.method, "construction (auto|idempotent|fourier)");

  auto* c_conv = app.add_subcommand("convolve", "multiply two group ring elements");
  add_common(c_conv, true);
  c_conv->add_option("left", opt.left, "left coefficient file")->required();
  c_conv->add_option("right", opt.right, "right coefficient file")->required();
  c_conv->add_option("--method", opt.method, "route (auto|direct|transform|fourier)");

  auto* c_verify = app.add_subcommand("verify", "verify an emitted artifact");
  add_common(c_verify, false);
  c_verify->add_option("input", opt.input, "artifact file to verify")->required();
  c_verify->add_option("--tol", opt.tol, "pass/fail tolerance");
  c_verify->add_option("--seed", opt.seed, "seed for sampled checks");

  auto* c_rep = app.add_subcommand("rep", "emit a block representation of the group");
  add_common(c_rep, true);
  c_rep->add_option("--block", opt.block, "block index (default: last block)");
  c_rep->add_flag("--orthonormal", opt.orthonormal, "orthonormalize the column bases");
  c_rep->add_option("--method", opt.method, "construction (auto|idempotent|fourier)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_group)) return cmd_group(opt);
    if (app.got_subcommand(c_chart)) return cmd_chartable(opt);
    if (app.got_subcommand(c_idem)) return cmd_idempotents(opt);
    if (app.got_subcommand(c_diag)) return cmd_diagonalizer(opt);
    if (app.got_subcommand(c_trans)) return cmd_transform(opt);
    if (app.got_subcommand(c_conv)) return cmd_convolve(opt);
    if (app.got_subcommand(c_verify)) return cmd_verify(opt);
    if (app.got_subcommand(c_rep)) return cmd_rep(opt);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
