#include "pentagon/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pentagon {

bool Subgroup::contains(element_t x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Group group_from_magma(const Magma& m) {
  Check assoc = is_associative(m);
  if (!assoc.ok) {
    std::ostringstream msg;
    msg << "not associative at (" << assoc.witness->x << "," << assoc.witness->y
        << "," << assoc.witness->z << ")";
    fail(errc::precondition, msg.str());
  }
  element_t identity = -1;
  for (element_t e = 0; e < m.n && identity < 0; ++e) {
    bool ok = true;
    for (element_t x = 0; x < m.n && ok; ++x)
      ok = m.op(e, x) == x && m.op(x, e) == x;
    if (ok) identity = e;
  }
  if (identity < 0) fail(errc::precondition, "no identity element");

  Group g;
  g.magma = m;
  g.identity = identity;
  g.inverse.assign(m.n, -1);
  for (element_t x = 0; x < m.n; ++x) {
    for (element_t y = 0; y < m.n; ++y)
      if (m.op(x, y) == identity && m.op(y, x) == identity) {
        g.inverse[x] = y;
        break;
      }
    if (g.inverse[x] < 0) {
      std::ostringstream msg;
      msg << "element " << x << " has no inverse";
      fail(errc::precondition, msg.str());
    }
  }
  return g;
}

bool is_abelian(const Group& g) {
  for (element_t x = 0; x < g.order(); ++x)
    for (element_t y = x + 1; y < g.order(); ++y)
      if (g.op(x, y) != g.op(y, x)) return false;
  return true;
}

bool is_elementary_abelian_2(const Group& g) {
  for (element_t x = 0; x < g.order(); ++x)
    if (g.op(x, x) != g.identity) return false;
  return true;
}

namespace {

bool closed_under_op(const Group& g, const std::vector<element_t>& sorted) {
  for (element_t a : sorted)
    for (element_t b : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(), g.op(a, b))) return false;
  return true;
}

bool conjugation_stable(const Group& g, const std::vector<element_t>& sorted) {
  for (element_t x = 0; x < g.order(); ++x)
    for (element_t k : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(),
                              g.op(g.op(g.inv(x), k), x)))
        return false;
  return true;
}

std::vector<element_t> closure(const Group& g, std::vector<element_t> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<element_t> members;
  auto add = [&](element_t e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
    }
  };
  add(g.identity);
  for (element_t e : gens) add(e);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      add(g.op(members[i], members[j]));
      add(g.op(members[j], members[i]));
    }
  std::sort(members.begin(), members.end());
  return members;
}

void sort_subgroups(std::vector<Subgroup>& subs) {
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
}

}  // namespace

Subgroup subgroup_from_elements(const Group& g, std::vector<element_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (element_t e : elements)
    if (e < 0 || e >= g.order()) fail(errc::precondition, "subgroup element out of range");
  if (!std::binary_search(elements.begin(), elements.end(), g.identity))
    fail(errc::precondition, "subgroup must contain the identity");
  if (!closed_under_op(g, elements))
    fail(errc::precondition, "element list is not closed under the operation");
  for (element_t e : elements)
    if (!std::binary_search(elements.begin(), elements.end(), g.inv(e)))
      fail(errc::precondition, "element list is not closed under inverses");
  Subgroup s;
  s.elements = std::move(elements);
  s.normal = conjugation_stable(g, s.elements);
  return s;
}

std::vector<Subgroup> all_subgroups(const Group& g) {
  const int n = g.order();
  std::vector<Subgroup> out;

  if (n <= 12) {
    // Exhaustive scan of subsets containing the identity. A nonempty subset of
    // a finite group that is closed under the operation is a subgroup.
    std::vector<element_t> others;
    for (element_t e = 0; e < n; ++e)
      if (e != g.identity) others.push_back(e);
    const std::uint64_t limit = std::uint64_t{1} << others.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      std::vector<element_t> subset{g.identity};
      for (std::size_t b = 0; b < others.size(); ++b)
        if (mask >> b & 1) subset.push_back(others[b]);
      std::sort(subset.begin(), subset.end());
      if (!closed_under_op(g, subset)) continue;
      Subgroup s;
      s.elements = std::move(subset);
      s.normal = conjugation_stable(g, s.elements);
      out.push_back(std::move(s));
    }
  } else {
    // Lattice construction: grow every known subgroup by one outside element.
    std::set<std::vector<element_t>> seen;
    std::vector<std::vector<element_t>> work{{g.identity}};
    seen.insert(work[0]);
    for (std::size_t i = 0; i < work.size(); ++i) {
      std::vector<element_t> base = work[i];
      for (element_t e = 0; e < n; ++e) {
        if (std::binary_search(base.begin(), base.end(), e)) continue;
        std::vector<element_t> gens = base;
        gens.push_back(e);
        std::vector<element_t> grown = closure(g, gens);
        if (seen.insert(grown).second) work.push_back(std::move(grown));
      }
    }
    for (auto& members : work) {
      Subgroup s;
      s.elements = std::move(members);
      s.normal = conjugation_stable(g, s.elements);
      out.push_back(std::move(s));
    }
  }

  sort_subgroups(out);
  return out;
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(g))
    if (s.normal) out.push_back(std::move(s));
  return out;
}

std::vector<std::vector<element_t>> right_cosets(const Group& g, const Subgroup& K) {
  std::vector<char> taken(g.order(), 0);
  std::vector<std::vector<element_t>> cosets;
  for (element_t x = 0; x < g.order(); ++x) {
    if (taken[x]) continue;
    std::vector<element_t> coset;
    for (element_t k : K.elements) {
      element_t e = g.op(k, x);
      coset.push_back(e);
      taken[e] = 1;
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  // Scanning x ascending and sorting members already yields least-member order.
  return cosets;
}

std::vector<std::vector<element_t>> representative_systems(const Group& g,
                                                           const Subgroup& K) {
  // Re-validate: callers may hand in a descriptor built elsewhere.
  Subgroup checked = subgroup_from_elements(g, K.elements);
  auto cosets = right_cosets(g, checked);

  // The coset of the identity is forced to pick the identity itself; every
  // other coset contributes |K| independent choices.
  std::vector<std::vector<element_t>> free_cosets;
  for (auto& c : cosets)
    if (!std::binary_search(c.begin(), c.end(), g.identity))
      free_cosets.push_back(std::move(c));

  std::vector<std::vector<element_t>> systems;
  std::vector<std::size_t> pick(free_cosets.size(), 0);
  while (true) {
    std::vector<element_t> reps{g.identity};
    for (std::size_t i = 0; i < free_cosets.size(); ++i)
      reps.push_back(free_cosets[i][pick[i]]);
    std::sort(reps.begin(), reps.end());
    systems.push_back(std::move(reps));

    std::size_t i = pick.size();
    while (i > 0) {
      --i;
      if (++pick[i] < free_cosets[i].size()) break;
      pick[i] = 0;
      if (i == 0) {
        std::sort(systems.begin(), systems.end());
        return systems;
      }
    }
    if (pick.empty()) {
      return systems;  // single coset: only {identity}
    }
  }
}

Group normalize_identity(const Group& g) {
  if (g.identity == 0) return g;
  // Transport the table along the transposition (0, identity).
  auto swap_in = [&](element_t x) {
    if (x == 0) return g.identity;
    if (x == g.identity) return element_t{0};
    return x;
  };
  Magma m;
  m.n = g.order();
  m.name = g.magma.name;
  m.table.resize(g.magma.table.size());
  for (element_t i = 0; i < m.n; ++i)
    for (element_t j = 0; j < m.n; ++j)
      m.table[static_cast<std::size_t>(i) * m.n + j] =
          swap_in(g.op(swap_in(i), swap_in(j)));
  return group_from_magma(m);
}

std::vector<Factorization> exact_factorizations(const Group& g) {
  auto subs = all_subgroups(g);
  std::vector<Factorization> out;
  for (const auto& A : subs)
    for (const auto& B : subs) {
      if (static_cast<long long>(A.size()) * B.size() != g.order()) continue;
      // Trivial intersection: identity only.
      bool trivial = true;
      for (element_t a : A.elements)
        if (a != g.identity && B.contains(a)) {
          trivial = false;
          break;
        }
      if (!trivial) continue;
      // |A||B| = |G| with trivial intersection makes (a,b) -> a*b injective,
      // hence bijective; fill the projection tables and double-check coverage.
      Factorization f;
      f.A = A;
      f.B = B;
      f.p1.assign(g.order(), -1);
      f.p2.assign(g.order(), -1);
      bool bijective = true;
      for (element_t a : A.elements)
        for (element_t b : B.elements) {
          element_t x = g.op(a, b);
          if (f.p1[x] != -1) {
            bijective = false;
            break;
          }
          f.p1[x] = a;
          f.p2[x] = b;
        }
      if (!bijective) fail(errc::internal, "product map not injective despite trivial intersection");
      out.push_back(std::move(f));
    }
  std::sort(out.begin(), out.end(), [](const Factorization& l, const Factorization& r) {
    if (l.A.elements != r.A.elements) return l.A.elements < r.A.elements;
    return l.B.elements < r.B.elements;
  });
  return out;
}

}  // namespace pentagon
