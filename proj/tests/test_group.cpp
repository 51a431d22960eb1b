#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "helpers.hpp"
#include "pentagon/corpus.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/group.hpp"

using namespace pentagon;
using testutil::throws_with;

TEST_CASE("group_from_magma certifies a cyclic table") {
  Group g = group_from_magma(cyclic(6).magma);
  CHECK(g.identity == 0);
  CHECK(g.inv(0) == 0);
  CHECK(g.inv(2) == 4);
  CHECK(g.inv(5) == 1);
}

TEST_CASE("group_from_magma rejects non-groups distinctly") {
  // not associative
  CHECK(throws_with(errc::precondition, [] {
    group_from_magma(validate_magma(2, {{0, 0}, {1, 0}}));
  }));
  // no identity
  CHECK(throws_with(errc::precondition, [] {
    group_from_magma(validate_magma(2, {{0, 0}, {0, 0}}));
  }));
  // the AND monoid: 1 is the identity but 0 has no inverse
  CHECK(throws_with(errc::precondition, [] {
    group_from_magma(validate_magma(2, {{0, 0}, {0, 1}}));
  }));
}

TEST_CASE("abelian and elementary abelian predicates") {
  CHECK(is_abelian(cyclic(6)));
  CHECK_FALSE(is_abelian(symmetric(3)));
  CHECK_FALSE(is_abelian(dihedral_8()));
  CHECK_FALSE(is_abelian(quaternion_8()));

  CHECK(is_elementary_abelian_2(cyclic(2)));
  CHECK(is_elementary_abelian_2(klein_four()));
  CHECK(is_elementary_abelian_2(elementary_8()));
  CHECK_FALSE(is_elementary_abelian_2(cyclic(4)));
  CHECK_FALSE(is_elementary_abelian_2(cyclic(6)));
}

TEST_CASE("subgroup_from_elements validates closure and computes normality") {
  Group z6 = cyclic(6);
  Subgroup k = subgroup_from_elements(z6, {0, 2, 4});
  CHECK(k.size() == 3);
  CHECK(k.normal);
  CHECK(k.contains(4));
  CHECK_FALSE(k.contains(1));

  CHECK(throws_with(errc::precondition,
                    [&] { subgroup_from_elements(z6, {0, 2}); }));
  CHECK(throws_with(errc::precondition, [&] { subgroup_from_elements(z6, {1, 2}); }));

  // a transposition generates a non-normal subgroup of s3
  Group s3 = symmetric(3);
  Subgroup t = subgroup_from_elements(s3, {0, 2});
  CHECK_FALSE(t.normal);
}

TEST_CASE("subgroup counts across the corpus") {
  std::map<std::string, std::pair<int, int>> expected = {
      // name -> (subgroups, normal subgroups)
      {"z2", {2, 2}},    {"z3", {2, 2}},     {"z4", {3, 3}},   {"z5", {2, 2}},
      {"z6", {4, 4}},    {"z7", {2, 2}},     {"z8", {4, 4}},   {"v4", {5, 5}},
      {"s3", {6, 3}},    {"d4", {10, 6}},    {"q8", {6, 6}},   {"z2xz4", {8, 8}},
      {"z2cube", {16, 16}},
  };
  for (const Group& g : corpus_order_le_8()) {
    auto [subs, normals] = expected.at(g.magma.name);
    CHECK(all_subgroups(g).size() == static_cast<std::size_t>(subs));
    CHECK(normal_subgroups(g).size() == static_cast<std::size_t>(normals));
  }
}

TEST_CASE("subgroups come sorted and certified") {
  Group s3 = symmetric(3);
  auto subs = all_subgroups(s3);
  for (std::size_t i = 1; i < subs.size(); ++i) {
    CHECK((subs[i - 1].size() < subs[i].size() ||
           (subs[i - 1].size() == subs[i].size() &&
            subs[i - 1].elements < subs[i].elements)));
  }
  for (const Subgroup& h : subs) CHECK(h.contains(s3.identity));
  // normal subgroups of s3: trivial, a3, whole
  auto normals = normal_subgroups(s3);
  REQUIRE(normals.size() == 3);
  CHECK(normals[0].elements == std::vector<element_t>{0});
  CHECK(normals[1].elements == std::vector<element_t>{0, 3, 4});
  CHECK(normals[2].size() == 6);
}

TEST_CASE("representative systems of z6") {
  Group z6 = cyclic(6);
  Subgroup k3 = subgroup_from_elements(z6, {0, 2, 4});
  auto reps3 = representative_systems(z6, k3);
  std::vector<std::vector<element_t>> expected3 = {{0, 1}, {0, 3}, {0, 5}};
  CHECK(reps3 == expected3);

  Subgroup k2 = subgroup_from_elements(z6, {0, 3});
  auto reps2 = representative_systems(z6, k2);
  std::vector<std::vector<element_t>> expected2 = {
      {0, 1, 2}, {0, 1, 5}, {0, 2, 4}, {0, 4, 5}};
  CHECK(reps2 == expected2);
}

TEST_CASE("representative system count is |K|^(index-1)") {
  for (const Group& g : corpus_order_le_8())
    for (const Subgroup& k : normal_subgroups(g)) {
      std::uint64_t expected = 1;
      for (int i = 1; i < g.order() / k.size(); ++i) expected *= k.size();
      CHECK(representative_systems(g, k).size() == expected);
    }
}

TEST_CASE("right cosets partition the group in least-member order") {
  Group z6 = cyclic(6);
  auto cosets = right_cosets(z6, subgroup_from_elements(z6, {0, 3}));
  std::vector<std::vector<element_t>> expected = {{0, 3}, {1, 4}, {2, 5}};
  CHECK(cosets == expected);
}

TEST_CASE("exact factorizations of z6") {
  auto fs = exact_factorizations(cyclic(6));
  REQUIRE(fs.size() == 4);
  CHECK(fs[0].A.elements == std::vector<element_t>{0});
  CHECK(fs[1].A.elements == std::vector<element_t>{0, 1, 2, 3, 4, 5});
  CHECK(fs[2].A.elements == std::vector<element_t>{0, 2, 4});
  CHECK(fs[2].B.elements == std::vector<element_t>{0, 3});
  CHECK(fs[3].A.elements == std::vector<element_t>{0, 3});
}

TEST_CASE("factorization counts across the corpus") {
  std::map<std::string, std::size_t> expected = {
      {"z2", 2},  {"z3", 2}, {"z4", 2},  {"z5", 2},     {"z6", 4},
      {"z7", 2},  {"z8", 2}, {"v4", 8},  {"s3", 8},     {"d4", 18},
      {"q8", 2},  {"z2xz4", 10},         {"z2cube", 58},
  };
  for (const Group& g : corpus_order_le_8())
    CHECK(exact_factorizations(g).size() == expected.at(g.magma.name));
}

TEST_CASE("factorization projections decompose every element") {
  for (const Group& g : corpus_order_le_8())
    for (const Factorization& f : exact_factorizations(g))
      for (element_t x = 0; x < g.order(); ++x) {
        CHECK(f.A.contains(f.p1[x]));
        CHECK(f.B.contains(f.p2[x]));
        CHECK(g.op(f.p1[x], f.p2[x]) == x);
      }
}

TEST_CASE("normalize_identity relabels the identity to zero") {
  // z2 written with the identity at index 1
  Group g = group_from_magma(validate_magma(2, {{1, 0}, {0, 1}}));
  CHECK(g.identity == 1);
  Group n = normalize_identity(g);
  CHECK(n.identity == 0);
  CHECK(n.magma.table == std::vector<element_t>{0, 1, 1, 0});

  Group z4 = cyclic(4);
  CHECK(normalize_identity(z4).magma.table == z4.magma.table);
}
