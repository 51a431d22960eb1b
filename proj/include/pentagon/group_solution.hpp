#pragma once

#include <string>
#include <vector>

#include "pentagon/group.hpp"
#include "pentagon/pairmap.hpp"

namespace pentagon {

/// A pentagon solution whose dot component is a group operation, stored as
/// the group plus the theta table: s(x,y) = (x.y, theta_x(y)), with row x of
/// `theta` tabulating the self-map theta_x.
struct GroupSolution {
  Group group;
  std::vector<element_t> theta;  // row-major n x n
  std::string name;

  int order() const { return group.order(); }
  element_t theta_at(element_t x, element_t y) const {
    return theta[static_cast<std::size_t>(x) * group.order() + y];
  }
  /// The induced PairMap: dot = group table, star = theta.
  PairMap pairmap() const;
};

/// Coset data extracted from or feeding the structure theorem: a normal
/// subgroup K, a representative system R (sorted, containing the identity),
/// and the tabulated map mu sending x to the representative of Kx.
struct CosetDatum {
  Subgroup K;
  std::vector<element_t> R;
  std::vector<element_t> mu;  // indexed by element, value in R

  bool operator==(const CosetDatum&) const = default;
};

/// Wraps a PairMap whose dot component equals g's table and whose tables pass
/// the three-condition check. Violations are reported as precondition errors
/// with the failing condition and triple.
GroupSolution theta_from_pairmap(const PairMap& s, const Group& g);

/// Row theta_1 (first argument = identity). Re-derives every row through
/// theta_x(y) = theta_1(x)^-1 theta_1(xy) and treats a mismatch as internal
/// corruption: the reconstruction identity is a theorem for valid solutions.
std::vector<element_t> theta_one(const GroupSolution& gs);

/// K = {x : theta_1(x) = identity}, certified to be a normal subgroup.
Subgroup kernel(const GroupSolution& gs);

/// Builds the solution with theta_x(y) = mu(x)^-1 mu(xy), where mu(x) is the
/// representative of Kx. K must be normal and reps must hit every right
/// coset exactly once with the identity among them. The result is certified
/// against the three-condition check before it is returned.
GroupSolution coset_solution(const Group& g, const Subgroup& K,
                             const std::vector<element_t>& reps);

/// Extracts (K, R, mu) with R = the image of theta_1 and mu = theta_1, then
/// certifies: R represents every coset once, theta_1(x) lies in Kx, and
/// coset_solution(g, K, R) rebuilds the identical theta table. Failures are
/// internal errors; the extraction is guaranteed for valid solutions.
CosetDatum decompose(const GroupSolution& gs);

}  // namespace pentagon
