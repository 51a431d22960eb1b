#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/group.hpp"
#include "pentagon/pairmap.hpp"

namespace pentagon {

namespace scan {

// Default scan-space caps, one per enumeration strategy.
inline constexpr std::uint64_t kRawScanCap = 256;           // (n^2)^(n^2) at n=2
inline constexpr std::uint64_t kStarTableCap = 19'683;      // n^(n^2) at n=3
inline constexpr std::uint64_t kThetaScanCap = 16'777'216;  // n^n at n=8
inline constexpr std::uint64_t kClassifyCap = 720;          // n! at n=6

}  // namespace scan

/// Partition of a solution list into equivalence classes. Classes are
/// numbered by their least member, so the labeling is canonical for a
/// canonically sorted list.
struct Classification {
  std::vector<int> class_of;         // class label per solution index
  std::vector<int> representatives;  // least member of each class

  int count() const { return static_cast<int>(representatives.size()); }
  bool operator==(const Classification&) const = default;
};

/// Result of one enumeration run: which carrier, which strategy, and the
/// canonically sorted duplicate-free solution list with per-solution
/// profiles. `classes` is present after classification.
struct EnumerationReport {
  std::string carrier;
  std::string method;  // "raw" | "theta-scan" | "theorem"
  std::vector<PairMap> solutions;
  std::vector<SolutionProfile> profiles;
  std::optional<Classification> classes;

  int count() const { return static_cast<int>(solutions.size()); }
};

/// Scans every (dot, star) table pair on {0..n-1}, i.e. all (n^2)^(n^2)
/// self-maps of the square, keeping those passing the direct pentagon check.
EnumerationReport enumerate_raw(int n, std::uint64_t budget = 0);

/// Scans all n^(n^2) star tables against a fixed dot table.
EnumerationReport enumerate_with_dot(const Magma& dot, std::uint64_t budget = 0);

/// Scans the n^n candidate theta_1 rows of a group solution: every solution
/// with dot = the group law has star(x,y) = theta_1(x)^-1 theta_1(xy), so
/// the row determines the table. Candidates not fixing the identity, or
/// failing theta_1's idempotence, are rejected before the table is built.
/// The candidate space may be striped across `workers` threads; the merged
/// output is re-sorted, so results are schedule-independent.
EnumerationReport enumerate_on_group(const Group& g, std::uint64_t budget = 0,
                                     int workers = 1);

/// Emits the coset solution of every (normal K, representative system R)
/// pair, certifying each round trip through decompose. No scan involved.
EnumerationReport enumerate_by_theorem(const Group& g);

/// Sum over normal subgroups K of |K|^([G:K]-1): the number of (K, R) pairs
/// and therefore of solutions on the group, counting representative systems
/// coset by coset. Cross-checked against both enumerations by the tests.
std::uint64_t count_by_formula(const Group& g);

/// Groups the list into equivalence classes by pairwise bijection search,
/// skipping pairs with distinct profiles (equivalence preserves them).
/// `schedule_seed` permutes the probe order; the union-find result is
/// independent of it, which the acceptance suite exploits as a determinism
/// check. Seed 0 means lexicographic probe order.
Classification classify_solutions(const std::vector<PairMap>& solutions,
                                  std::uint64_t budget = 0,
                                  std::uint64_t schedule_seed = 0);

/// Same, attached to a report.
EnumerationReport classify(EnumerationReport report, std::uint64_t budget = 0,
                           std::uint64_t schedule_seed = 0);

/// All dot tables making (dot, g_star's table) a solution. Full n^(n^2) dot
/// scan when it fits the budget; otherwise, for elementary abelian 2-groups,
/// only the predicted left-projection table is verified forward. Larger
/// non-2-elementary groups are rejected: there is nothing to verify forward.
std::vector<Magma> star_group_search(const Group& g_star,
                                     std::uint64_t budget = 0);

/// Conjunction of constraints on profile flags; unset fields match anything.
struct ProfileFilter {
  std::optional<bool> is_solution;
  std::optional<bool> is_reversed;
  std::optional<bool> is_invertible;
  std::optional<bool> is_commutative;
  std::optional<bool> is_cocommutative;

  bool matches(const SolutionProfile& p) const;
};

/// The sub-report of solutions whose profiles match; classes are dropped.
EnumerationReport filter_profiles(const EnumerationReport& report,
                                  const ProfileFilter& filter);

}  // namespace pentagon
