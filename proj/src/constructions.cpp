#include "pentagon/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pentagon/corpus.hpp"
#include "pentagon/group_solution.hpp"

namespace pentagon {

namespace {

std::string tag(const char* base, const std::string& carrier) {
  if (carrier.empty()) return base;
  return std::string{base} + "(" + carrier + ")";
}

PairMap blank(int n, std::string name) {
  PairMap s;
  s.n = n;
  s.dot_table.resize(static_cast<std::size_t>(n) * n);
  s.star_table.resize(static_cast<std::size_t>(n) * n);
  s.name = std::move(name);
  return s;
}

void check_self_map(int n, const std::vector<element_t>& f, const char* which) {
  if (static_cast<int>(f.size()) != n) {
    std::ostringstream msg;
    msg << which << " has " << f.size() << " entries, expected " << n;
    fail(errc::precondition, msg.str());
  }
  for (element_t v : f)
    if (v < 0 || v >= n) {
      std::ostringstream msg;
      msg << which << " value " << v << " outside [0," << n << ")";
      fail(errc::precondition, msg.str());
    }
}

void check_factorization(const Group& g, const Factorization& f) {
  Subgroup a = subgroup_from_elements(g, f.A.elements);
  Subgroup b = subgroup_from_elements(g, f.B.elements);
  if (static_cast<long long>(a.size()) * b.size() != g.order())
    fail(errc::precondition, "factorization sizes do not multiply to |G|");
  for (element_t e : a.elements)
    if (e != g.identity && b.contains(e))
      fail(errc::precondition, "factorization subgroups intersect beyond the identity");
  if (static_cast<int>(f.p1.size()) != g.order() ||
      static_cast<int>(f.p2.size()) != g.order())
    fail(errc::precondition, "projection tables have the wrong size");
  for (element_t x = 0; x < g.order(); ++x)
    if (!a.contains(f.p1[x]) || !b.contains(f.p2[x]) ||
        g.op(f.p1[x], f.p2[x]) != x)
      fail(errc::precondition, "projection tables do not decompose x = p1(x).p2(x)");
}

void check_associative(const Magma& m) {
  Check assoc = is_associative(m);
  if (!assoc.ok) {
    std::ostringstream msg;
    msg << "operation not associative at (" << assoc.witness->x << ","
        << assoc.witness->y << "," << assoc.witness->z << ")";
    fail(errc::precondition, msg.str());
  }
}

}  // namespace

PairMap kac_takesaki_s(const Group& g) {
  PairMap s = blank(g.order(), tag("kt-s", g.magma.name));
  for (element_t x = 0; x < g.order(); ++x)
    for (element_t y = 0; y < g.order(); ++y) {
      const std::size_t i = static_cast<std::size_t>(x) * g.order() + y;
      s.dot_table[i] = g.op(x, y);
      s.star_table[i] = y;
    }
  return s;
}

PairMap kac_takesaki_t(const Group& g) {
  PairMap s = blank(g.order(), tag("kt-t", g.magma.name));
  for (element_t x = 0; x < g.order(); ++x)
    for (element_t y = 0; y < g.order(); ++y) {
      const std::size_t i = static_cast<std::size_t>(x) * g.order() + y;
      s.dot_table[i] = x;
      s.star_table[i] = g.op(g.inv(x), y);
    }
  return s;
}

PairMap endo_solution(const Magma& m, const std::vector<element_t>& gamma) {
  check_associative(m);
  check_self_map(m.n, gamma, "gamma");
  if (!is_idempotent_map(gamma))
    fail(errc::precondition, "gamma is not idempotent");
  if (auto w = endomorphism_witness(m, gamma)) {
    std::ostringstream msg;
    msg << "gamma is not an endomorphism at (" << w->first << "," << w->second << ")";
    fail(errc::precondition, msg.str());
  }
  PairMap s = blank(m.n, tag("endo", m.name));
  for (element_t x = 0; x < m.n; ++x)
    for (element_t y = 0; y < m.n; ++y) {
      const std::size_t i = static_cast<std::size_t>(x) * m.n + y;
      s.dot_table[i] = m.op(x, y);
      s.star_table[i] = gamma[y];
    }
  return s;
}

PairMap constant_solution(const Magma& m, element_t e) {
  if (e < 0 || e >= m.n) fail(errc::precondition, "element out of range");
  if (m.op(e, e) != e) fail(errc::precondition, "element is not idempotent");
  PairMap s = endo_solution(m, std::vector<element_t>(m.n, e));
  s.name = tag("constant", m.name);
  return s;
}

PairMap militaru(int n, const std::vector<element_t>& alpha,
                 const std::vector<element_t>& beta) {
  if (n <= 0) fail(errc::precondition, "carrier size must be positive");
  check_self_map(n, alpha, "alpha");
  check_self_map(n, beta, "beta");
  if (!is_idempotent_map(alpha)) fail(errc::precondition, "alpha is not idempotent");
  if (!is_idempotent_map(beta)) fail(errc::precondition, "beta is not idempotent");
  for (element_t x = 0; x < n; ++x)
    if (alpha[beta[x]] != beta[alpha[x]]) {
      std::ostringstream msg;
      msg << "alpha and beta do not commute at " << x;
      fail(errc::precondition, msg.str());
    }
  PairMap s = blank(n, "militaru");
  for (element_t x = 0; x < n; ++x)
    for (element_t y = 0; y < n; ++y) {
      const std::size_t i = static_cast<std::size_t>(x) * n + y;
      s.dot_table[i] = alpha[x];
      s.star_table[i] = beta[y];
    }
  return s;
}

PairMap zakrzewski(const Group& g, const Factorization& f) {
  check_factorization(g, f);
  PairMap s = blank(g.order(), tag("zakrzewski", g.magma.name));
  for (element_t x = 0; x < g.order(); ++x)
    for (element_t y = 0; y < g.order(); ++y) {
      const std::size_t i = static_cast<std::size_t>(x) * g.order() + y;
      const element_t w = g.op(y, g.inv(f.p1[x]));
      s.dot_table[i] = g.op(f.p2[w], x);
      s.star_table[i] = w;
    }
  return s;
}

PairMap baaj_skandalis(const Group& g, const Factorization& f) {
  check_factorization(g, f);
  PairMap s = blank(g.order(), tag("baaj-skandalis", g.magma.name));
  for (element_t x = 0; x < g.order(); ++x)
    for (element_t y = 0; y < g.order(); ++y) {
      const std::size_t i = static_cast<std::size_t>(x) * g.order() + y;
      const element_t w = g.op(g.inv(f.p2[x]), y);
      s.dot_table[i] = g.op(x, f.p1[w]);
      s.star_table[i] = w;
    }
  return s;
}

PairMap sign_solution(int degree) {
  if (degree < 3 || degree > 4)
    fail(errc::precondition, "degree must be 3 or 4");
  Group g = symmetric(degree);

  // Ranks of the even permutations, by inversion count of the word.
  std::vector<element_t> word(degree);
  std::iota(word.begin(), word.end(), 0);
  std::vector<element_t> even;
  element_t rank = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < degree; ++i)
      for (int j = i + 1; j < degree; ++j)
        if (word[i] > word[j]) ++inversions;
    if (inversions % 2 == 0) even.push_back(rank);
    ++rank;
  } while (std::next_permutation(word.begin(), word.end()));
  Subgroup alternating = subgroup_from_elements(g, even);

  // The transposition of points 0 and 1 is the word (1,0,2,...): it follows
  // the (degree-1)! words starting with 0, so its rank is (degree-1)!.
  element_t swap01 = 1;
  for (int i = 2; i < degree; ++i) swap01 *= i;

  GroupSolution gs =
      coset_solution(g, alternating, {g.identity, swap01});
  PairMap s = gs.pairmap();
  s.name = tag("sign", g.magma.name);
  return s;
}

}  // namespace pentagon
