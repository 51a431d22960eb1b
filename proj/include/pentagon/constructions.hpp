#pragma once

#include <vector>

#include "pentagon/group.hpp"
#include "pentagon/pairmap.hpp"

namespace pentagon {

/// s(x,y) = (x.y, y).
PairMap kac_takesaki_s(const Group& g);

/// t(x,y) = (x, x^-1.y).
PairMap kac_takesaki_t(const Group& g);

/// s(x,y) = (x.y, gamma(y)) for an idempotent endomorphism gamma of an
/// associative magma.
PairMap endo_solution(const Magma& m, const std::vector<element_t>& gamma);

/// s(x,y) = (x.y, e) for an idempotent element e of an associative magma;
/// the endo construction with gamma constantly e.
PairMap constant_solution(const Magma& m, element_t e);

/// s(x,y) = (alpha(x), beta(y)) for commuting idempotent self-maps of
/// {0..n-1}. No operation on the carrier is involved.
PairMap militaru(int n, const std::vector<element_t>& alpha,
                 const std::vector<element_t>& beta);

/// s(x,y) = (p2(y.p1(x)^-1).x, y.p1(x)^-1) for an exact factorization of g.
PairMap zakrzewski(const Group& g, const Factorization& f);

/// s(x,y) = (x.p1(p2(x)^-1.y), p2(x)^-1.y); the opposite of the Zakrzewski
/// map on the same factorization.
PairMap baaj_skandalis(const Group& g, const Factorization& f);

/// The coset solution on S_degree with K = A_degree and R = {identity, t}
/// where t swaps the two smallest points: the star component sees only the
/// signs of its arguments. Degree 3 or 4.
PairMap sign_solution(int degree);

}  // namespace pentagon
