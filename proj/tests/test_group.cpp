#include <doctest.h>

#include <fstream>
#include <set>

#include "grmat/errors.hpp"
#include "grmat/group.hpp"
#include "grmat/io.hpp"
#include "helpers.hpp"

using namespace grmat;

TEST_CASE("group spec parsing") {
  CHECK(parse_group_spec("C12").kind == GroupSpec::Kind::Cyclic);
  CHECK(parse_group_spec("C12").order == 12);
  CHECK(parse_group_spec("D6").kind == GroupSpec::Kind::Dihedral);
  CHECK(parse_group_spec("Q8").kind == GroupSpec::Kind::Quaternion8);
  CHECK(parse_group_spec("K8").kind == GroupSpec::Kind::Quaternion8);
  CHECK(parse_group_spec("C3xC3").kind == GroupSpec::Kind::Product);
  CHECK(parse_group_spec("C3xC3").factors.size() == 2);
  CHECK(parse_group_spec("table:/tmp/g.json").kind == GroupSpec::Kind::Table);
  CHECK(parse_group_spec(" C2xC2xC2 ").factors.size() == 3);

  CHECK_THROWS_AS(parse_group_spec("Q16"), SpecError);
  CHECK_THROWS_AS(parse_group_spec("D7"), SpecError);
  CHECK_THROWS_AS(parse_group_spec("C0"), SpecError);
  CHECK_THROWS_AS(parse_group_spec("X5"), SpecError);
  CHECK_THROWS_AS(parse_group_spec(""), SpecError);
}

TEST_CASE("builtin listings and labels") {
  GroupPtr d6 = build_group("D6");
  CHECK(d6->order() == 6);
  CHECK(d6->labels() == std::vector<std::string>{"1", "a", "a^2", "b", "ab", "a^2b"});
  CHECK_FALSE(d6->abelian());

  GroupPtr q8 = build_group("Q8");
  CHECK(q8->labels() ==
        std::vector<std::string>{"1", "a", "a^2", "a^3", "b", "ab", "a^2b", "a^3b"});

  GroupPtr c4 = build_group("C4");
  CHECK(c4->labels() == std::vector<std::string>{"1", "g", "g^2", "g^3"});
  CHECK(c4->abelian());

  // product listing: first factor runs fastest, labels put later factors first
  GroupPtr c3c3 = build_group("C3xC3");
  CHECK(c3c3->labels() ==
        std::vector<std::string>{"1", "g", "g^2", "h", "hg", "hg^2", "h^2", "h^2g",
                                 "h^2g^2"});
  CHECK(c3c3->abelian());

  GroupPtr c2c4 = build_group("C2xC4");
  CHECK(c2c4->labels() ==
        std::vector<std::string>{"1", "g", "h", "hg", "h^2", "h^2g", "h^3", "h^3g"});

  CHECK(d6->index_of("a^2b") == 5);
  CHECK(d6->index_of("ab") == 4);
  CHECK_FALSE(d6->index_of("zz").has_value());
}

TEST_CASE("dihedral and quaternion products") {
  GroupPtr d6 = build_group("D6");
  // a*b = ab, b*a = a^2 b, b*ab = a^2
  CHECK(d6->mul(1, 3) == 4);
  CHECK(d6->mul(3, 1) == 5);
  CHECK(d6->mul(3, 4) == 2);
  CHECK(d6->inverse(1) == 2);
  CHECK(d6->inverse(3) == 3);

  GroupPtr q8 = build_group("Q8");
  // b^2 = a^2, (ab)^2 = a^2, a^3 inverts a
  CHECK(q8->mul(4, 4) == 2);
  CHECK(q8->mul(5, 5) == 2);
  CHECK(q8->inverse(1) == 3);
  CHECK(q8->inverse(4) == 6);
  CHECK(q8->inverse(5) == 7);

  for (const char* name : {"D6", "D8", "D12", "Q8", "C3xC4"}) {
    GroupPtr g = build_group(name);
    for (int i = 0; i < g->order(); ++i) {
      CHECK(g->mul(i, g->inverse(i)) == 0);
      CHECK(g->mul(g->inverse(i), i) == 0);
      CHECK(g->mul(0, i) == i);
      CHECK(g->mul(i, 0) == i);
    }
  }
}

TEST_CASE("conjugacy classes") {
  GroupPtr d6 = build_group("D6");
  ConjugacyPartition part = conjugacy_classes(*d6);
  REQUIRE(part.count() == 3);
  CHECK(part.classes[0] == std::vector<int>{0});
  CHECK(part.classes[1] == std::vector<int>{1, 2});
  CHECK(part.classes[2] == std::vector<int>{3, 4, 5});
  CHECK(part.representatives == std::vector<int>{0, 1, 3});
  CHECK(part.class_of[4] == 2);

  GroupPtr d10 = build_group("D10");
  ConjugacyPartition p10 = conjugacy_classes(*d10);
  std::multiset<size_t> sizes;
  for (const auto& c : p10.classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 2, 5});

  GroupPtr q8 = build_group("Q8");
  ConjugacyPartition pq = conjugacy_classes(*q8);
  REQUIRE(pq.count() == 5);
  CHECK(pq.classes[1] == std::vector<int>{1, 3});
  CHECK(pq.classes[2] == std::vector<int>{2});
  CHECK(pq.classes[3] == std::vector<int>{4, 6});
  CHECK(pq.classes[4] == std::vector<int>{5, 7});

  GroupPtr c6 = build_group("C6");
  CHECK(conjugacy_classes(*c6).count() == 6);
}

TEST_CASE("group matrix pattern") {
  GroupPtr c3 = build_group("C3");
  Eigen::MatrixXi gm = group_matrix(*c3);
  Eigen::MatrixXi want(3, 3);
  want << 0, 1, 2, 2, 0, 1, 1, 2, 0;
  CHECK((gm.array() == want.array()).all());

  for (const char* name : {"D12", "C3xC4", "Q8"}) {
    GroupPtr g = build_group(name);
    Eigen::MatrixXi m = group_matrix(*g);
    CHECK(m.rows() == g->order());
    for (int i = 0; i < g->order(); ++i) {
      CHECK(m(0, i) == i);  // identity-first listing pins the first row
      for (int j = 0; j < g->order(); ++j)
        CHECK(m(i, j) == g->mul(g->inverse(i), j));
    }
  }
}

TEST_CASE("table validation rejects broken tables") {
  // repeated entry in a row
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}, {}, GroupSpec::cyclic(2)),
                  StructureError);
  // identity must come first
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}, {}, GroupSpec::cyclic(2)),
                  StructureError);
  // out-of-range index
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 5}, {5, 0}}, {}, GroupSpec::cyclic(2)),
                  StructureError);
  // a Latin square with identity that is not associative:
  // (1*1)*2 = 0*2 = 2 but 1*(1*2) = 1*3 = 4
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 3, 4, 0, 1},
                                        {3, 4, 1, 2, 0},
                                        {4, 2, 0, 1, 3}};
  CHECK_THROWS_AS(FiniteGroup::from_table(loop, {}, GroupSpec::cyclic(5)), StructureError);
  try {
    FiniteGroup::from_table(loop, {}, GroupSpec::cyclic(5));
  } catch (const StructureError& e) {
    CHECK(std::string(e.what()).find("associativ") != std::string::npos);
  }
}

TEST_CASE("table file round trip") {
  GroupPtr q8 = build_group("Q8");
  io::json j = io::group_to_json(*q8);
  std::string path = "/tmp/grmat_test_q8_table.json";
  io::write_file(path, j.dump());

  GroupPtr loaded = build_group("table:" + path);
  CHECK(loaded->order() == 8);
  CHECK(loaded->labels() == q8->labels());
  CHECK(compatible(q8, loaded));
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k) CHECK(loaded->mul(i, k) == q8->mul(i, k));
}

TEST_CASE("compatibility checks") {
  GroupPtr a = build_group("D6");
  GroupPtr b = build_group("D6");
  GroupPtr c = build_group("C6");
  CHECK(compatible(a, a));
  CHECK(compatible(a, b));  // structurally equal even as distinct objects
  CHECK_FALSE(compatible(a, c));
}
