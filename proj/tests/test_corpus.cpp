#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "pentagon/corpus.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/group.hpp"

using namespace pentagon;
using testutil::throws_with;

namespace {

int element_order(const Group& g, element_t x) {
  int k = 1;
  element_t p = x;
  while (p != g.identity) {
    p = g.op(p, x);
    ++k;
  }
  return k;
}

int count_of_order(const Group& g, int target) {
  int count = 0;
  for (element_t x = 0; x < g.order(); ++x)
    if (element_order(g, x) == target) ++count;
  return count;
}

int center_size(const Group& g) {
  int count = 0;
  for (element_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (element_t y = 0; y < g.order() && central; ++y)
      central = g.op(x, y) == g.op(y, x);
    if (central) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("the corpus lists the thirteen groups of order 2..8") {
  auto corpus = corpus_order_le_8();
  REQUIRE(corpus.size() == 13);
  std::vector<std::string> names;
  std::vector<int> orders;
  for (const Group& g : corpus) {
    names.push_back(g.magma.name);
    orders.push_back(g.order());
  }
  CHECK(names == std::vector<std::string>{"z2", "z3", "z4", "z5", "z6", "z7", "z8",
                                          "v4", "s3", "d4", "q8", "z2xz4",
                                          "z2cube"});
  CHECK(orders == std::vector<int>{2, 3, 4, 5, 6, 7, 8, 4, 6, 8, 8, 8, 8});
}

TEST_CASE("every corpus table is a certified group with identity zero") {
  for (const Group& g : corpus_order_le_8()) {
    Group re = group_from_magma(g.magma);
    CHECK(re.identity == 0);
    CHECK(re.inverse == g.inverse);
  }
  CHECK(trivial_group().order() == 1);
  CHECK(symmetric(4).order() == 24);
}

TEST_CASE("cyclic group arithmetic") {
  Group z6 = cyclic(6);
  CHECK(z6.op(4, 5) == 3);
  CHECK(z6.inv(1) == 5);
  CHECK(element_order(z6, 1) == 6);
  CHECK(element_order(z6, 2) == 3);
  CHECK(element_order(z6, 3) == 2);
}

TEST_CASE("symmetric(3) uses lexicographic rank indexing") {
  Group s3 = symmetric(3);
  // ranks: 0 = id, 1 = (12), 2 = (01), 3 = (012) as word (1,2,0),
  //        4 = (021) as word (2,0,1), 5 = (02)
  CHECK(s3.op(2, 2) == 0);
  CHECK(s3.op(1, 1) == 0);
  CHECK(s3.op(5, 5) == 0);
  CHECK(s3.op(3, 3) == 4);
  CHECK(s3.op(1, 2) == 4);
  CHECK(s3.op(2, 1) == 3);
  CHECK(s3.inv(3) == 4);
  CHECK(element_order(s3, 3) == 3);
}

TEST_CASE("klein four group is elementary abelian") {
  Group v4 = klein_four();
  CHECK(is_elementary_abelian_2(v4));
  CHECK(v4.op(1, 2) == 3);
  CHECK(v4.op(2, 3) == 1);
}

TEST_CASE("dihedral_8 structure") {
  Group d4 = dihedral_8();
  CHECK(d4.order() == 8);
  CHECK_FALSE(is_abelian(d4));
  CHECK(center_size(d4) == 2);
  CHECK(count_of_order(d4, 2) == 5);  // r^2 and four reflections
  CHECK(count_of_order(d4, 4) == 2);  // r and r^3
}

TEST_CASE("quaternion_8 structure") {
  Group q8 = quaternion_8();
  CHECK(q8.order() == 8);
  CHECK_FALSE(is_abelian(q8));
  CHECK(center_size(q8) == 2);
  CHECK(count_of_order(q8, 2) == 1);  // -1 is the only involution
  CHECK(count_of_order(q8, 4) == 6);
  // every subgroup is normal even though the group is not abelian
  for (const Subgroup& h : all_subgroups(q8)) CHECK(h.normal);
}

TEST_CASE("dihedral and quaternion groups are not isomorphic") {
  // distinguished by involution counts, so the corpus really has both
  CHECK(count_of_order(dihedral_8(), 2) != count_of_order(quaternion_8(), 2));
}

TEST_CASE("z2_times_z4 indexing is 4a + b") {
  Group g = z2_times_z4();
  CHECK(g.op(1, 3) == 0);   // (0,1)+(0,3)
  CHECK(g.op(5, 7) == 0);   // (1,1)+(1,3)
  CHECK(g.op(4, 4) == 0);   // (1,0)+(1,0)
  CHECK(element_order(g, 1) == 4);
  CHECK(element_order(g, 4) == 2);
  CHECK(element_order(g, 5) == 4);
}

TEST_CASE("elementary_8 is xor on three bits") {
  Group g = elementary_8();
  CHECK(is_elementary_abelian_2(g));
  CHECK(g.op(3, 5) == 6);
  CHECK(g.op(7, 7) == 0);
}

TEST_CASE("group_by_name resolves the corpus and cyclic families") {
  CHECK(group_by_name("z6").magma.name == "z6");
  CHECK(group_by_name("v4").order() == 4);
  CHECK(group_by_name("q8").order() == 8);
  CHECK(group_by_name("s4").order() == 24);
  CHECK(group_by_name("z12").order() == 12);
  CHECK(group_by_name("z1").order() == 1);
  CHECK(throws_with(errc::precondition, [] { group_by_name("foo"); }));
  CHECK(throws_with(errc::precondition, [] { group_by_name("zx"); }));
}

TEST_CASE("corpus group tables are pairwise distinct") {
  std::set<std::vector<element_t>> tables;
  for (const Group& g : corpus_order_le_8()) tables.insert(g.magma.table);
  CHECK(tables.size() == 13);
}
