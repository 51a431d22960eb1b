#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "pentagon/constructions.hpp"
#include "pentagon/corpus.hpp"
#include "pentagon/errors.hpp"
#include "pentagon/group_solution.hpp"
#include "pentagon/pairmap.hpp"

using namespace pentagon;
using testutil::throws_with;

TEST_CASE("Kac-Takesaki maps on z3") {
  Group z3 = cyclic(3);
  PairMap s = kac_takesaki_s(z3);
  CHECK(s.dot(1, 2) == 0);
  CHECK(s.star(1, 2) == 2);
  CHECK(is_solution_direct(s).ok);
  CHECK(is_invertible(s));

  PairMap t = kac_takesaki_t(z3);
  CHECK(t.dot(1, 2) == 1);
  CHECK(t.star(1, 2) == 1);  // 1^-1 . 2 = 2 + 2
  CHECK(is_solution_direct(t).ok);
  CHECK(is_invertible(t));
}

TEST_CASE("Kac-Takesaki invariants across the corpus") {
  for (const Group& g : corpus_order_le_8()) {
    PairMap s = kac_takesaki_s(g);
    PairMap t = kac_takesaki_t(g);
    CHECK(is_solution_direct(s).ok);
    CHECK(is_solution_direct(t).ok);
    CHECK(is_cocommutative(s));
    CHECK(is_commutative(t));
    CHECK(is_commutative(s) == is_abelian(g));
    CHECK(opposite(opposite(s)) == s);
  }
}

TEST_CASE("endomorphism solutions") {
  Group z6 = cyclic(6);
  PairMap s = endo_solution(z6.magma, {0, 3, 0, 3, 0, 3});
  CHECK(s.dot(1, 2) == 3);
  CHECK(s.star(1, 2) == 0);
  CHECK(is_solution_direct(s).ok);

  // gamma = id reproduces the Kac-Takesaki map
  CHECK(endo_solution(z6.magma, {0, 1, 2, 3, 4, 5}) == kac_takesaki_s(z6));

  // gamma must be idempotent, an endomorphism, and the magma associative
  CHECK(throws_with(errc::precondition, [&] {
    endo_solution(z6.magma, {0, 2, 4, 0, 2, 4});  // not idempotent
  }));
  CHECK(throws_with(errc::precondition, [&] {
    endo_solution(z6.magma, {0, 1, 0, 1, 0, 1});  // idempotent, not endo
  }));
  CHECK(throws_with(errc::precondition, [] {
    endo_solution(validate_magma(2, {{0, 0}, {1, 0}}), {0, 1});  // not associative
  }));
  CHECK(throws_with(errc::precondition,
                    [&] { endo_solution(z6.magma, {0, 1, 2}); }));
}

TEST_CASE("constant solutions at idempotent elements") {
  Group z6 = cyclic(6);
  PairMap s = constant_solution(z6.magma, 0);
  for (element_t x = 0; x < 6; ++x)
    for (element_t y = 0; y < 6; ++y) CHECK(s.star(x, y) == 0);
  CHECK(is_solution_direct(s).ok);
  CHECK(throws_with(errc::precondition, [&] { constant_solution(z6.magma, 3); }));

  // works on a non-group: the AND monoid with absorbing idempotent 0
  Magma andm = validate_magma(2, {{0, 0}, {0, 1}});
  CHECK(is_solution_direct(constant_solution(andm, 0)).ok);
  CHECK(is_solution_direct(constant_solution(andm, 1)).ok);
}

TEST_CASE("militaru maps from commuting idempotent pairs") {
  PairMap s = militaru(3, {0, 0, 0}, {0, 1, 2});
  CHECK(s.dot(1, 2) == 0);
  CHECK(s.star(1, 2) == 2);
  SolutionProfile p = profile(s);
  CHECK(p.is_solution);
  CHECK(p.is_reversed);
  CHECK(p.is_commutative);
  CHECK(p.is_cocommutative);

  CHECK(militaru(2, {0, 1}, {0, 1}) == identity_pairmap(2));

  CHECK(throws_with(errc::precondition, [] {
    militaru(2, {0, 0}, {1, 1});  // idempotent but not commuting
  }));
  CHECK(throws_with(errc::precondition, [] { militaru(2, {1, 0}, {0, 1}); }));
  CHECK(throws_with(errc::precondition, [] { militaru(2, {0}, {0, 1}); }));
}

TEST_CASE("every militaru map at n <= 3 has the full profile") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& [a, b] : commuting_idempotent_pairs(n)) {
      SolutionProfile p = profile(militaru(n, a, b));
      CHECK(p.is_solution);
      CHECK(p.is_reversed);
      CHECK(p.is_commutative);
      CHECK(p.is_cocommutative);
    }
}

TEST_CASE("zakrzewski on the split klein four factorization") {
  Group v4 = klein_four();
  Factorization f;
  for (const Factorization& cand : exact_factorizations(v4))
    if (cand.A.elements == std::vector<element_t>{0, 2} &&
        cand.B.elements == std::vector<element_t>{0, 1})
      f = cand;
  REQUIRE(f.p1.size() == 4);

  PairMap s = zakrzewski(v4, f);
  CHECK(s.dot(2, 3) == 3);
  CHECK(s.star(2, 3) == 1);
  CHECK(is_solution_direct(s).ok);
  CHECK(is_invertible(s));

  PairMap bs = baaj_skandalis(v4, f);
  CHECK(bs.dot(2, 3) == 0);
  CHECK(bs.star(2, 3) == 3);
  CHECK(is_solution_direct(bs).ok);
  CHECK(opposite(s) == bs);
}

TEST_CASE("trivial factorizations reduce to Kac-Takesaki maps") {
  for (const Group& g : {cyclic(6), symmetric(3)}) {
    Factorization whole_triv, triv_whole;
    for (const Factorization& f : exact_factorizations(g)) {
      if (f.A.size() == g.order() && f.B.size() == 1) whole_triv = f;
      if (f.A.size() == 1 && f.B.size() == g.order()) triv_whole = f;
    }
    REQUIRE(whole_triv.p1.size() == static_cast<std::size_t>(g.order()));
    REQUIRE(triv_whole.p1.size() == static_cast<std::size_t>(g.order()));
    // A = G, B = {1}: s(x,y) = (x, y x^-1), the opposite Kac-Takesaki map
    CHECK(zakrzewski(g, whole_triv) == opposite(kac_takesaki_s(g)));
    // A = {1}, B = G: s(x,y) = (x, x^-1 y)
    CHECK(baaj_skandalis(g, triv_whole) == kac_takesaki_t(g));
  }
}

TEST_CASE("zakrzewski and baaj_skandalis are opposites on every factorization") {
  for (const Group& g : corpus_order_le_8())
    for (const Factorization& f : exact_factorizations(g)) {
      PairMap z = zakrzewski(g, f);
      PairMap bs = baaj_skandalis(g, f);
      CHECK(is_solution_direct(z).ok);
      CHECK(is_solution_direct(bs).ok);
      CHECK(is_invertible(z));
      CHECK(is_invertible(bs));
      CHECK(opposite(z) == bs);
    }
}

TEST_CASE("sign solution on degree 3") {
  PairMap s = sign_solution(3);
  CHECK(s.n == 6);
  CHECK(is_solution_direct(s).ok);
  CHECK(s.dot(2, 2) == 0);
  CHECK(s.star(2, 2) == 2);

  Group s3 = symmetric(3);
  GroupSolution gs = theta_from_pairmap(s, s3);
  CHECK(theta_one(gs) == std::vector<element_t>{0, 2, 2, 0, 0, 2});
  CHECK(kernel(gs).elements == std::vector<element_t>{0, 3, 4});  // a3
}

TEST_CASE("sign solution on degree 4") {
  PairMap s = sign_solution(4);
  CHECK(s.n == 24);
  CHECK(is_solution_direct(s).ok);
  Group s4 = symmetric(4);
  CHECK(kernel(theta_from_pairmap(s, s4)).size() == 12);
}

TEST_CASE("sign solution degree bounds") {
  CHECK(throws_with(errc::precondition, [] { sign_solution(2); }));
  CHECK(throws_with(errc::precondition, [] { sign_solution(5); }));
}
