#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/magma.hpp"

namespace pentagon {

/// A candidate map s(x,y) = (x dot y, x star y) stored as two n x n tables.
/// Canonical order and equality compare (n, dot, star) as integer sequences;
/// the optional name is serialization metadata only.
struct PairMap {
  int n = 0;
  std::vector<element_t> dot_table;   // row-major
  std::vector<element_t> star_table;  // row-major
  std::string name;

  element_t dot(element_t x, element_t y) const {
    return dot_table[static_cast<std::size_t>(x) * n + y];
  }
  element_t star(element_t x, element_t y) const {
    return star_table[static_cast<std::size_t>(x) * n + y];
  }
};

bool operator==(const PairMap& a, const PairMap& b);
bool operator<(const PairMap& a, const PairMap& b);
inline bool operator!=(const PairMap& a, const PairMap& b) { return !(a == b); }

/// Range-checks both tables; reports the first bad entry by table/row/col.
PairMap make_pairmap(int n, const std::vector<std::vector<element_t>>& dot_rows,
                     const std::vector<std::vector<element_t>>& star_rows,
                     std::string name = "");

/// s(x,y) = (x, y).
PairMap identity_pairmap(int n);
/// s(x,y) = (y, x).
PairMap flip_pairmap(int n);

// Coordinate actions on triples: s acting on positions (1,2), (2,3), and
// (1,3), the last one conjugated through the flip of the tail coordinates.
Triple act12(const PairMap& s, Triple t);
Triple act23(const PairMap& s, Triple t);
Triple act13(const PairMap& s, Triple t);

/// Pentagon identity checked on every triple: the (2,3)(1,3)(1,2) composite
/// must equal the (1,2)(2,3) composite.
Check is_solution_direct(const PairMap& s);

/// Reversed pentagon identity: (1,2)(1,3)(2,3) composite equals (2,3)(1,2).
Check is_reversed_solution(const PairMap& s);

/// Verdict of the three-condition characterization. `condition` is 1 for
/// associativity of dot, 2 and 3 for the mixed identities, 0 on success.
struct ConditionCheck {
  bool ok = false;
  int condition = 0;
  std::optional<Triple> witness;
};

/// Equivalent to the direct check, decided condition by condition:
///   (1) (x.y).z = x.(y.z)
///   (2) (x*y).((x.y)*z) = x*(y.z)
///   (3) (x*y)*((x.y)*z) = y*z
/// The least-numbered failing condition is reported with its least triple.
ConditionCheck is_solution_conditions(const PairMap& s);

/// Conjugation by the flip: dot'(x,y) = star(y,x), star'(x,y) = dot(y,x).
/// s solves the pentagon identity iff the result solves the reversed one.
PairMap tau_conjugate(const PairMap& s);

/// True iff (x,y) -> (x dot y, x star y) permutes the n^2 pairs.
bool is_invertible(const PairMap& s);

/// Inverse of the pair permutation. Precondition: is_invertible(s).
PairMap inverse(const PairMap& s);

/// The opposite map: flip, invert, flip. Precondition: is_invertible(s).
/// Involutive: opposite(opposite(s)) == s.
PairMap opposite(const PairMap& s);

/// (1,2)(1,3) composite equals (1,3)(1,2) composite on every triple.
bool is_commutative(const PairMap& s);
/// (1,3)(2,3) composite equals (2,3)(1,3) composite on every triple.
bool is_cocommutative(const PairMap& s);

struct SolutionProfile {
  bool is_solution = false;
  bool is_reversed = false;
  bool is_invertible = false;
  bool is_commutative = false;
  bool is_cocommutative = false;

  bool operator==(const SolutionProfile&) const = default;
};

/// Runs all five decidable checks.
SolutionProfile profile(const PairMap& s);

/// Transport of s along a bijection: r with (eta x eta) s = r (eta x eta).
PairMap apply_bijection(const PairMap& s, const std::vector<element_t>& eta);

inline constexpr std::uint64_t kEquivalenceSearchCap = 40'320;  // 8!

/// Searches for a bijection eta with (eta x eta) s = r (eta x eta), assigning
/// images least-first and propagating the forced images of products. Returns
/// the witnessing eta or nullopt. Carriers must have equal size; the n!
/// search space must fit the budget.
std::optional<std::vector<element_t>> are_equivalent(const PairMap& s,
                                                     const PairMap& r,
                                                     std::uint64_t budget = 0);

}  // namespace pentagon
