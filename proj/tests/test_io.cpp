#include <doctest.h>

#include <random>
#include <sstream>

#include "goldens.hpp"
#include "grmat/blockdiag.hpp"
#include "grmat/errors.hpp"
#include "grmat/idempotents.hpp"
#include "grmat/io.hpp"
#include "helpers.hpp"

using namespace grmat;
using io::json;
using testhelp::diff;
using testhelp::vdiff;

TEST_CASE("complex formatting and parsing") {
  CHECK(io::format_complex({1.5, 0}, 12) == "1.5");
  CHECK(io::format_complex({0, -1}, 12) == "0-1i");
  CHECK(io::format_complex({-0.5, 0.8660254037844386}, 12) == "-0.5+0.866025403784i");

  CHECK(io::parse_complex("3") == cplx(3, 0));
  CHECK(io::parse_complex("-2.5e-3") == cplx(-0.0025, 0));
  CHECK(io::parse_complex("1+2i") == cplx(1, 2));
  CHECK(io::parse_complex(" 1.5e-10-2e+4i ") == cplx(1.5e-10, -2e4));
  CHECK(io::parse_complex("i") == cplx(0, 1));
  CHECK(io::parse_complex("-i") == cplx(0, -1));
  CHECK(io::parse_complex("2i") == cplx(0, 2));

  CHECK_THROWS_AS(io::parse_complex("1+2j"), StructureError);
  CHECK_THROWS_AS(io::parse_complex("abc"), StructureError);
  CHECK_THROWS_AS(io::parse_complex(""), StructureError);

  // machine form reproduces doubles bit-for-bit
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uni(-1e6, 1e6);
  for (int trial = 0; trial < 200; ++trial) {
    cplx z(uni(rng), uni(rng) * 1e-13);
    CHECK(io::parse_complex(io::format_complex_machine(z)) == z);
  }
}

TEST_CASE("matrix round trips") {
  std::mt19937_64 rng(43);
  Eigen::MatrixXcd m(3, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j)
      m(i, j) = cplx(std::uniform_real_distribution<double>(-2, 2)(rng),
                     std::uniform_real_distribution<double>(-2, 2)(rng));

  CHECK(diff(io::matrix_from_json(io::matrix_to_json(m)), m) == 0);

  std::istringstream csv(io::matrix_to_csv(m));
  CHECK(diff(io::matrix_from_csv(csv), m) == 0);

  Eigen::VectorXcd v = testhelp::random_coeffs(7, rng);
  CHECK(vdiff(io::vector_from_json(io::vector_to_json(v)), v) == 0);

  // tolerant readers: bare reals and strings allowed as entries
  CHECK(vdiff(io::vector_from_json(json::parse("[1, [0,1], \"2-3i\"]")),
              testhelp::vec({{1, 0}, {0, 1}, {2, -3}})) == 0);

  CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[1,2],[3]]")), StructureError);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("[]")), StructureError);
  std::istringstream ragged("1,2\n3\n");
  CHECK_THROWS_AS(io::matrix_from_csv(ragged), StructureError);
}

TEST_CASE("character table file round trip") {
  GroupPtr d6 = build_group("D6");
  CharacterTable x = builtin_character_table(d6);
  json j = io::character_table_to_json(*d6, x);

  CharacterTable back = io::character_table_from_json(*d6, j);
  CHECK(diff(back.values, x.values) == 0);
  CHECK(back.degrees == x.degrees);
  CHECK(back.classes.representatives == x.classes.representatives);

  // classes may be listed in any order as long as values follow
  json permuted = j;
  std::swap(permuted["classes"][0], permuted["classes"][2]);
  for (auto& row : permuted["rows"]) std::swap(row[0], row[2]);
  CharacterTable re = io::character_table_from_json(*d6, permuted);
  CHECK(re.classes.representatives[0] == 3);
  CHECK(re.values(2, 0) == x.values(2, 2));

  json bad_rep = j;
  bad_rep["classes"][1]["representative"] = "zz";
  CHECK_THROWS_AS(io::character_table_from_json(*d6, bad_rep), StructureError);

  json bad_size = j;
  bad_size["classes"][1]["size"] = 4;
  CHECK_THROWS_AS(io::character_table_from_json(*d6, bad_size), StructureError);

  json dup = j;
  dup["classes"][1]["representative"] = "1";
  CHECK_THROWS_AS(io::character_table_from_json(*d6, dup), StructureError);

  json bad_values = j;
  bad_values["rows"][2][1] = {5.0, 0.0};
  CHECK_THROWS_AS(io::character_table_from_json(*d6, bad_values), VerificationError);
}

TEST_CASE("idempotent set file round trip") {
  GroupPtr d10 = build_group("D10");
  IdempotentSet set = central_idempotents(d10, builtin_character_table(d10));
  json j = io::idempotents_to_json(*d10, set);

  IdempotentSet back = io::idempotents_from_json(d10, j);
  REQUIRE(back.count() == set.count());
  CHECK(back.ranks == set.ranks);
  for (int i = 0; i < set.count(); ++i)
    CHECK(vdiff(back.elements[i].coeffs, set.elements[i].coeffs) == 0);

  json bad = j;
  bad["elements"][0] = io::vector_to_json(Eigen::VectorXcd::Zero(4));
  CHECK_THROWS_AS(io::idempotents_from_json(d10, bad), StructureError);
}

TEST_CASE("diagonalizer file round trip") {
  GroupPtr d6 = build_group("D6");
  IdempotentSet set = central_idempotents(d6, builtin_character_table(d6));
  Diagonalizer d = build_diagonalizer(d6, set);
  json j = io::diagonalizer_to_json(d);

  Diagonalizer back = io::diagonalizer_from_json(d6, j);
  CHECK(diff(back.p, d.p) == 0);
  CHECK(back.block_sizes == d.block_sizes);
  CHECK(back.unitary == d.unitary);
  CHECK(diff(back.p * back.p_inv, Eigen::MatrixXcd::Identity(6, 6)) <= 1e-11);

  json singular = j;
  singular["p"] = io::matrix_to_json(Eigen::MatrixXcd::Zero(6, 6));
  CHECK_THROWS_AS(io::diagonalizer_from_json(d6, singular), NumericError);

  json bad_sizes = j;
  bad_sizes["block_sizes"] = {1, 1, 3};
  CHECK_THROWS_AS(io::diagonalizer_from_json(d6, bad_sizes), StructureError);
}

TEST_CASE("file helpers") {
  std::string path = "/tmp/grmat_test_io_blob.json";
  io::write_file(path, "{\"x\": 1}");
  CHECK(io::read_file(path) == "{\"x\": 1}");
  CHECK(io::load_json(path)["x"] == 1);

  io::write_file(path, "{broken");
  CHECK_THROWS_AS(io::load_json(path), SpecError);
  CHECK_THROWS_AS(io::read_file("/tmp/grmat_no_such_file_here"), SpecError);
}
