#include "grmat/idempotents.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "grmat/abelian.hpp"
#include "grmat/io.hpp"

namespace grmat {

double CharacterTableReport::max() const {
  return std::max({first_row_dev, orthogonality_dev, degree_dev, degree_square_sum_dev});
}

bool CharacterTableReport::pass(double tol) const { return max() <= tol; }

CharacterTableReport validate_character_table(const FiniteGroup& g, const CharacterTable& x) {
  int n = g.order();
  int r = x.count();
  CharacterTableReport rep;
  if (x.values.rows() != r || x.values.cols() != r || x.classes.count() != r)
    throw StructureError("character table shape mismatch");

  int id_class = x.classes.class_of[g.identity_index()];
  for (int j = 0; j < r; ++j)
    rep.first_row_dev = std::max(rep.first_row_dev, std::abs(x.values(0, j) - 1.0));
  for (int i = 0; i < r; ++i) {
    cplx d = x.values(i, id_class);
    rep.degree_dev = std::max(rep.degree_dev,
                              std::max(std::abs(d.real() - std::round(d.real())),
                                       std::abs(d.imag())));
  }
  double sq = 0;
  for (int i = 0; i < r; ++i) sq += double(x.degrees[i]) * x.degrees[i];
  rep.degree_square_sum_dev = std::abs(sq - n);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k <= i; ++k) {
      cplx s = 0;
      for (int j = 0; j < r; ++j)
        s += double(x.classes.classes[j].size()) * x.values(i, j) *
             std::conj(x.values(k, j));
      cplx want = (i == k) ? cplx(n, 0) : cplx(0, 0);
      rep.orthogonality_dev = std::max(rep.orthogonality_dev, std::abs(s - want) / n);
    }
  return rep;
}

std::vector<Eigen::MatrixXd> class_sum_matrices(const FiniteGroup& g) {
  return class_sum_matrices(g, conjugacy_classes(g));
}

std::vector<Eigen::MatrixXd> class_sum_matrices(const FiniteGroup& g,
                                                const ConjugacyPartition& part) {
  int n = g.order();
  int r = part.count();
  std::vector<Eigen::MatrixXd> ms(r, Eigen::MatrixXd::Zero(r, r));
  std::vector<int> conv(n);
  for (int j = 0; j < r; ++j) {
    for (int l = 0; l < r; ++l) {
      std::fill(conv.begin(), conv.end(), 0);
      for (int x : part.classes[j])
        for (int y : part.classes[l]) ++conv[g.mul(x, y)];
      // the product of class sums is constant on classes
      for (int m = 0; m < r; ++m) ms[j](m, l) = conv[part.representatives[m]];
    }
  }
  return ms;
}

// ---------------------------------------------------------------------------
// built-in tables

namespace {

CharacterTable cyclic_table(int n) {
  CharacterTable x;
  x.classes.classes.reserve(n);
  for (int i = 0; i < n; ++i) {
    x.classes.classes.push_back({i});
    x.classes.representatives.push_back(i);
    x.classes.class_of.push_back(i);
  }
  x.values = fourier_matrix(n);
  x.degrees.assign(n, 1);
  return x;
}

CharacterTable dihedral_table(const FiniteGroup& g) {
  int order = g.order();
  int n = order / 2;
  CharacterTable x;
  x.classes = conjugacy_classes(g);
  int r = x.classes.count();
  x.values.resize(r, r);

  // Character value on the class represented by listing index `rep`:
  // rotations are a^rep for rep < n, reflections are a^(rep-n) b.
  auto linear = [&](int row, int chi_a, int chi_b) {
    for (int j = 0; j < r; ++j) {
      int rep = x.classes.representatives[j];
      int e = rep % n;
      int refl = rep / n;
      double v = 1.0;
      if (chi_a == -1 && (e % 2)) v = -v;
      if (chi_b == -1 && refl) v = -v;
      x.values(row, j) = v;
    }
    x.degrees.push_back(1);
  };
  int row = 0;
  linear(row++, 1, 1);
  linear(row++, 1, -1);
  if (n % 2 == 0) {
    linear(row++, -1, 1);
    linear(row++, -1, -1);
  }
  for (int t = 1; t <= (n - 1) / 2; ++t, ++row) {
    for (int j = 0; j < r; ++j) {
      int rep = x.classes.representatives[j];
      if (rep >= n)
        x.values(row, j) = 0.0;
      else
        x.values(row, j) = 2.0 * std::cos(2.0 * std::numbers::pi * t * rep / n);
    }
    x.degrees.push_back(2);
  }
  return x;
}

CharacterTable quaternion_table(const FiniteGroup& g) {
  CharacterTable x;
  x.classes = conjugacy_classes(g);
  int r = x.classes.count();  // 5
  x.values.resize(r, r);
  auto fill_linear = [&](int row, int chi_a, int chi_b) {
    for (int j = 0; j < r; ++j) {
      int rep = x.classes.representatives[j];
      int e = rep % 4;
      int refl = rep / 4;
      double v = 1.0;
      if (chi_a == -1 && (e % 2)) v = -v;
      if (chi_b == -1 && refl) v = -v;
      x.values(row, j) = v;
    }
  };
  fill_linear(0, 1, 1);
  fill_linear(1, 1, -1);
  fill_linear(2, -1, 1);
  fill_linear(3, -1, -1);
  for (int j = 0; j < r; ++j) {
    int rep = x.classes.representatives[j];
    x.values(4, j) = rep == 0 ? 2.0 : (rep == 2 ? -2.0 : 0.0);
  }
  x.degrees = {1, 1, 1, 1, 2};
  return x;
}

}  // namespace

CharacterTable builtin_character_table(const GroupPtr& g) {
  const GroupSpec& spec = g->spec();
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return cyclic_table(spec.order);
    case GroupSpec::Kind::Dihedral:
      return dihedral_table(*g);
    case GroupSpec::Kind::Quaternion8:
      return quaternion_table(*g);
    case GroupSpec::Kind::Product: {
      auto f = abelian_factors_of(spec);
      if (f) return abelian_character_table(*f);
      throw SpecError("no built-in character table for " + spec.to_string() +
                      "; use the numeric source");
    }
    case GroupSpec::Kind::Table:
      throw SpecError("no built-in character table for a loaded table group; "
                      "use the numeric source");
  }
  throw SpecError("unhandled spec kind");
}

// ---------------------------------------------------------------------------
// numeric tables

namespace {

// Character rows from one batch of eigenvectors, or nullopt if the combination
// failed to separate the eigenvalues.
std::optional<CharacterTable> numeric_attempt(const FiniteGroup& g,
                                              const ConjugacyPartition& part,
                                              const std::vector<Eigen::MatrixXd>& ms,
                                              std::mt19937_64& rng) {
  int n = g.order();
  int r = part.count();
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(r, r);
  for (int j = 0; j < r; ++j) l += unif(rng) * ms[j];

  Eigen::EigenSolver<Eigen::MatrixXd> es(l);
  if (es.info() != Eigen::Success) return std::nullopt;
  Eigen::MatrixXcd vecs = es.eigenvectors();

  double scale = 1.0;
  for (const auto& m : ms) scale = std::max(scale, m.cwiseAbs().maxCoeff());
  double eig_tol = 1e-7 * scale;

  // Each eigenvector of a separating combination is a common eigenvector of
  // every class-sum matrix; its eigenvalue tuple is the central character.
  Eigen::MatrixXcd omega(r, r);
  for (int i = 0; i < r; ++i) {
    Eigen::VectorXcd v = vecs.col(i);
    int pivot = 0;
    double best = 0;
    for (int m = 0; m < r; ++m)
      if (std::abs(v[m]) > best) {
        best = std::abs(v[m]);
        pivot = m;
      }
    for (int j = 0; j < r; ++j) {
      Eigen::VectorXcd mv = ms[j] * v;
      cplx w = mv[pivot] / v[pivot];
      if ((mv - w * v).cwiseAbs().maxCoeff() > eig_tol * (1.0 + std::abs(w)))
        return std::nullopt;  // not a common eigenvector: eigenvalues clustered
      omega(i, j) = w;
    }
  }

  int id_class = part.class_of[g.identity_index()];
  CharacterTable x;
  x.classes = part;
  x.values.resize(r, r);
  x.degrees.assign(r, 0);
  for (int i = 0; i < r; ++i) {
    // |G| = d^2 sum_j |omega_j|^2 / |C_j| fixes the degree from the row norm.
    double s = 0;
    for (int j = 0; j < r; ++j)
      s += std::norm(omega(i, j)) / double(part.classes[j].size());
    double d = std::sqrt(double(n) / s);
    if (std::abs(d - std::round(d)) > 1e-6 || std::round(d) < 1.0) return std::nullopt;
    double di = std::round(d);
    for (int j = 0; j < r; ++j)
      x.values(i, j) = di * omega(i, j) / double(part.classes[j].size());
    x.degrees[i] = static_cast<int>(di);
  }
  // Snap degrees through the identity column as well.
  for (int i = 0; i < r; ++i) {
    cplx d = x.values(i, id_class);
    if (std::abs(d - cplx(x.degrees[i], 0)) > 1e-6) return std::nullopt;
  }

  // Deterministic row order: degree ascending, then character values rounded
  // to 6 decimals, lexicographically largest first. The trivial character is
  // the unique maximum among degree-1 rows, so it ends up in row 0.
  auto r6 = [](double v) { return std::round(v * 1e6) / 1e6; };
  std::vector<int> perm(r);
  for (int i = 0; i < r; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (x.degrees[a] != x.degrees[b]) return x.degrees[a] < x.degrees[b];
    for (int j = 0; j < r; ++j) {
      double ra = r6(x.values(a, j).real()), rb = r6(x.values(b, j).real());
      if (ra != rb) return ra > rb;
      double ia = r6(x.values(a, j).imag()), ib = r6(x.values(b, j).imag());
      if (ia != ib) return ia > ib;
    }
    return false;
  });
  CharacterTable sorted;
  sorted.classes = x.classes;
  sorted.values.resize(r, r);
  sorted.degrees.resize(r);
  for (int i = 0; i < r; ++i) {
    sorted.values.row(i) = x.values.row(perm[i]);
    sorted.degrees[i] = x.degrees[perm[i]];
  }
  return sorted;
}

}  // namespace

CharacterTable numeric_character_table(const GroupPtr& g, std::uint64_t seed) {
  ConjugacyPartition part = conjugacy_classes(*g);
  std::vector<Eigen::MatrixXd> ms = class_sum_matrices(*g, part);
  std::mt19937_64 rng(seed);
  const int attempts = 5;
  for (int a = 0; a < attempts; ++a) {
    auto x = numeric_attempt(*g, part, ms, rng);
    if (!x) continue;
    if (validate_character_table(*g, *x).pass(1e-8)) return *x;
  }
  throw NumericError(
      "class-sum eigenvalues failed to separate after " + std::to_string(attempts) +
      " random combinations; rerun with a different seed");
}

CharacterTable character_table(const GroupPtr& g, TableSource source, std::uint64_t seed,
                               const std::string& file) {
  switch (source) {
    case TableSource::Builtin:
      return builtin_character_table(g);
    case TableSource::Numeric:
      return numeric_character_table(g, seed);
    case TableSource::File:
      if (file.empty()) throw SpecError("file source needs a path");
      return io::load_character_table(g, file);
  }
  throw SpecError("unhandled character table source");
}

// ---------------------------------------------------------------------------
// idempotents

double IdempotentReport::max() const {
  return std::max({idempotency, orthogonality, completeness, symmetry});
}

bool IdempotentReport::pass(double tol) const { return max() <= tol; }

IdempotentSet central_idempotents(const GroupPtr& g, const CharacterTable& x) {
  int n = g->order();
  int r = x.count();
  IdempotentSet set;
  set.elements.reserve(r);
  for (int i = 0; i < r; ++i) {
    Eigen::VectorXcd c(n);
    for (int e = 0; e < n; ++e)
      c[e] = (double(x.degrees[i]) / n) * std::conj(x.values(i, x.classes.class_of[e]));
    set.elements.push_back(make_element(g, std::move(c)));
  }
  IdempotentReport rep = verify_idempotent_set(set);
  if (!rep.pass(1e-9))
    throw VerificationError("central idempotents fail their axioms (worst residual " +
                                std::to_string(rep.max()) + ")",
                            rep.max());
  set.ranks = idempotent_ranks(set);
  return set;
}

IdempotentReport verify_idempotent_set(const IdempotentSet& set) {
  IdempotentReport rep;
  if (set.elements.empty()) throw StructureError("empty idempotent set");
  const GroupPtr& g = set.elements.front().group;
  int k = set.count();
  GroupRingElement total = zero_element(g);
  for (int i = 0; i < k; ++i) {
    const auto& ei = set.elements[i];
    rep.idempotency = std::max(rep.idempotency, max_abs((ring_multiply(ei, ei) - ei).coeffs));
    rep.symmetry = std::max(rep.symmetry, max_abs((involution(ei) - ei).coeffs));
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      rep.orthogonality =
          std::max(rep.orthogonality, max_abs(ring_multiply(ei, set.elements[j]).coeffs));
    }
    total = total + ei;
  }
  rep.completeness = max_abs((total - identity_element(g)).coeffs);
  return rep;
}

std::vector<int> idempotent_ranks(const IdempotentSet& set) {
  if (set.elements.empty()) throw StructureError("empty idempotent set");
  int n = set.elements.front().group->order();
  std::vector<int> ranks;
  ranks.reserve(set.elements.size());
  int sum = 0;
  for (const auto& e : set.elements) {
    // The matrix image has the identity coefficient down its diagonal, so the
    // trace is n * coeffs[0]; for an idempotent the trace is the rank.
    cplx tr = double(n) * e.coeffs[0];
    double rounded = std::round(tr.real());
    if (std::abs(tr.real() - rounded) > 1e-6 || std::abs(tr.imag()) > 1e-6)
      throw NumericError("idempotent trace " + std::to_string(tr.real()) + "+" +
                         std::to_string(tr.imag()) + "i is not within 1e-6 of an integer");
    ranks.push_back(static_cast<int>(rounded));
    sum += ranks.back();
  }
  if (sum != n)
    throw NumericError("idempotent ranks sum to " + std::to_string(sum) +
                       ", expected the group order " + std::to_string(n));
  return ranks;
}

}  // namespace grmat
