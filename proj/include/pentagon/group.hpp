#pragma once

#include <vector>

#include "pentagon/magma.hpp"

namespace pentagon {

/// A Magma certified associative with identity and two-sided inverses.
/// Instances are produced by group_from_magma and never mutated.
struct Group {
  Magma magma;
  element_t identity = 0;
  std::vector<element_t> inverse;  // indexed by element

  int order() const { return magma.n; }
  element_t op(element_t x, element_t y) const { return magma.op(x, y); }
  element_t inv(element_t x) const { return inverse[x]; }
};

/// A subgroup given by its sorted element list. `normal` records the result
/// of the conjugation check at construction time.
struct Subgroup {
  std::vector<element_t> elements;  // sorted ascending, contains the identity
  bool normal = false;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(element_t x) const;

  auto operator<=>(const Subgroup&) const = default;
};

/// An exact factorization G = A*B with A and B meeting only in the identity.
/// p1/p2 tabulate the unique decomposition x = p1(x)*p2(x).
struct Factorization {
  Subgroup A;
  Subgroup B;
  std::vector<element_t> p1;  // indexed by element, value in A
  std::vector<element_t> p2;  // indexed by element, value in B
};

/// Certifies associativity, locates the identity and all inverses.
/// Failures are reported distinctly: not associative (with witness triple),
/// no identity, or a named element without an inverse.
Group group_from_magma(const Magma& m);

bool is_abelian(const Group& g);

/// True when every element squares to the identity.
bool is_elementary_abelian_2(const Group& g);

/// Validates that `elements` is closed under op and inverse and contains the
/// identity; returns the descriptor with the normality flag computed.
Subgroup subgroup_from_elements(const Group& g, std::vector<element_t> elements);

/// Every subgroup, sorted by (size, elements). Exhaustive closed-subset scan
/// for order <= 12, generator-closure lattice construction above.
std::vector<Subgroup> all_subgroups(const Group& g);

/// The normal ones from all_subgroups, same order.
std::vector<Subgroup> normal_subgroups(const Group& g);

/// All systems of representatives of the right cosets Kx that contain the
/// identity. Each list is sorted ascending; the sequence is sorted
/// lexicographically. Exactly |K|^([G:K]-1) lists.
std::vector<std::vector<element_t>> representative_systems(const Group& g,
                                                           const Subgroup& K);

/// Right cosets Kx as sorted lists, ordered by least member.
std::vector<std::vector<element_t>> right_cosets(const Group& g, const Subgroup& K);

/// All ordered pairs (A, B) of subgroups with trivial intersection whose
/// product covers G, projections tabulated. Includes the two trivial pairs.
/// Sorted lexicographically by (A.elements, B.elements).
std::vector<Factorization> exact_factorizations(const Group& g);

/// Relabels elements so the identity sits at index 0, swapping it with
/// whatever was there; canonical group output requires this. No-op when the
/// identity is already 0.
Group normalize_identity(const Group& g);

}  // namespace pentagon
