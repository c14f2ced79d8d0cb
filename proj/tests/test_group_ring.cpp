#include <doctest.h>

#include <random>

#include "goldens.hpp"
#include "grmat/errors.hpp"
#include "grmat/group_ring.hpp"
#include "helpers.hpp"

using namespace grmat;
using testhelp::diff;
using testhelp::vdiff;

TEST_CASE("sigma embeds elements as patterned matrices") {
  GroupPtr d6 = build_group("D6");

  // the identity element maps to the identity matrix
  RGMatrix one = sigma(identity_element(d6));
  CHECK(diff(one.entries, Eigen::MatrixXcd::Identity(6, 6)) == 0);

  // the rotation generator maps to its fixed permutation matrix
  RGMatrix a = sigma(basis_element(d6, 1));
  CHECK(diff(a.entries, golden::d6_sigma_a()) == 0);

  // cyclic case: rows are successive right shifts of the coefficients
  GroupPtr c3 = build_group("C3");
  RGMatrix circ = sigma(make_element(c3, testhelp::vec({{1, 0}, {2, 0}, {3, 0}})));
  CHECK(diff(circ.entries,
             testhelp::mat({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}})) == 0);

  // row 0 always reproduces the coefficient vector
  std::mt19937_64 rng(11);
  GroupRingElement w = testhelp::random_element(d6, rng);
  CHECK(vdiff(sigma(w).entries.row(0).transpose(), w.coeffs) == 0);
}

TEST_CASE("ring multiplication matches the polynomial oracle on cyclic groups") {
  GroupPtr c8 = build_group("C8");
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    GroupRingElement w = testhelp::random_element(c8, rng);
    GroupRingElement v = testhelp::random_element(c8, rng);
    Eigen::VectorXcd expect = testhelp::poly_mod_convolve(w.coeffs, v.coeffs);
    CHECK(vdiff(ring_multiply(w, v).coeffs, expect) <= 1e-12);
  }
}

TEST_CASE("sigma is a ring homomorphism") {
  std::mt19937_64 rng(23);
  for (const char* name : {"D10", "Q8", "C3xC4"}) {
    GroupPtr g = build_group(name);
    for (int trial = 0; trial < 20; ++trial) {
      GroupRingElement w = testhelp::random_element(g, rng);
      GroupRingElement v = testhelp::random_element(g, rng);
      CHECK(diff(sigma(w + v).entries, sigma(w).entries + sigma(v).entries) == 0);
      CHECK(diff(sigma(ring_multiply(w, v)).entries,
                 sigma(w).entries * sigma(v).entries) <= 1e-10);
    }
  }

  // unit laws
  GroupPtr d6 = build_group("D6");
  GroupRingElement w = testhelp::random_element(d6, rng);
  CHECK(vdiff(ring_multiply(w, identity_element(d6)).coeffs, w.coeffs) == 0);
  CHECK(vdiff(ring_multiply(identity_element(d6), w).coeffs, w.coeffs) == 0);

  // products of basis elements follow the group table
  GroupPtr q8 = build_group("Q8");
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      GroupRingElement p = ring_multiply(basis_element(q8, i), basis_element(q8, j));
      CHECK(vdiff(p.coeffs, basis_element(q8, q8->mul(i, j)).coeffs) == 0);
    }

  GroupPtr c8 = build_group("C8");
  GroupRingElement other = testhelp::random_element(c8, rng);
  CHECK_THROWS_AS(ring_multiply(w, other), StructureError);
}

TEST_CASE("involution") {
  std::mt19937_64 rng(29);
  GroupPtr k8 = build_group("Q8");
  for (int trial = 0; trial < 20; ++trial) {
    GroupRingElement w = testhelp::random_element(k8, rng);
    // involution is its own inverse
    CHECK(vdiff(involution(involution(w)).coeffs, w.coeffs) == 0);
    // and matches conjugate-transpose on the matrix side
    CHECK(diff(sigma(involution(w)).entries, sigma(w).entries.adjoint()) == 0);
  }

  // real class-constant elements are fixed points
  GroupPtr d6 = build_group("D6");
  GroupRingElement e2 = make_element(d6, golden::d6_e2());
  CHECK(vdiff(involution(e2).coeffs, e2.coeffs) == 0);
}

TEST_CASE("pattern detection recovers elements and rejects breaks") {
  GroupPtr d6 = build_group("D6");
  std::mt19937_64 rng(31);
  GroupRingElement w = testhelp::random_element(d6, rng);

  auto back = is_rg_matrix(d6, sigma(w).entries);
  REQUIRE(back.has_value());
  CHECK(vdiff(back->coeffs, w.coeffs) == 0);

  // the fixed reference projection matrix decodes to its coefficient vector
  auto e2 = is_rg_matrix(d6, golden::d6_e2_matrix());
  REQUIRE(e2.has_value());
  CHECK(vdiff(e2->coeffs, golden::d6_e2()) <= 1e-15);

  // one broken entry spoils the pattern
  Eigen::MatrixXcd broken = sigma(w).entries;
  broken(1, 0) += 1.0;
  CHECK_FALSE(is_rg_matrix(d6, broken).has_value());

  CHECK_FALSE(is_rg_matrix(d6, Eigen::MatrixXcd::Random(6, 6)).has_value());
  CHECK_THROWS_AS(is_rg_matrix(d6, Eigen::MatrixXcd::Identity(4, 4)),
                  StructureError);
}

TEST_CASE("relisting the group conjugates every patterned matrix by a permutation") {
  GroupPtr d8 = build_group("D8");
  int n = d8->order();
  std::mt19937_64 rng(37);

  for (int trial = 0; trial < 10; ++trial) {
    // random permutation fixing the identity
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i;
    std::shuffle(pi.begin() + 1, pi.end(), rng);
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[pi[i]] = i;

    // relisted multiplication table
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) table[i][j] = inv[d8->mul(pi[i], pi[j])];
    GroupPtr relisted = FiniteGroup::from_table(table, {}, GroupSpec::dihedral(n));

    GroupRingElement w = testhelp::random_element(d8, rng);
    Eigen::VectorXcd moved(n);
    for (int i = 0; i < n; ++i) moved[i] = w.coeffs[pi[i]];

    Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j) q(pi[j], j) = 1.0;

    Eigen::MatrixXcd lhs = sigma(make_element(relisted, moved)).entries;
    Eigen::MatrixXcd rhs = q.transpose() * sigma(w).entries * q;
    CHECK(diff(lhs, rhs) == 0);
  }
}
