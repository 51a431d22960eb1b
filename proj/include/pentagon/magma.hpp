#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentagon/errors.hpp"

namespace pentagon {

/// Elements of a finite carrier are indices 0..n-1.
using element_t = int;

struct Triple {
  element_t x, y, z;
  auto operator<=>(const Triple&) const = default;
};

/// Verdict of an exhaustive check; `witness` is the lexicographically least
/// failing triple when the check fails.
struct Check {
  bool ok = false;
  std::optional<Triple> witness;
};

/// A finite set {0..n-1} with a total binary operation given as an n x n
/// table, row = left argument. No algebraic law is assumed.
struct Magma {
  int n = 0;
  std::vector<element_t> table;  // row-major, n*n entries
  std::string name;              // optional, carried through serialization

  element_t op(element_t x, element_t y) const { return table[static_cast<std::size_t>(x) * n + y]; }

  bool operator==(const Magma& rhs) const { return n == rhs.n && table == rhs.table; }
};

/// Builds a Magma after range-checking every entry. Reports the first bad
/// entry by (row, col). Performs no algebraic check.
Magma validate_magma(int n, const std::vector<std::vector<element_t>>& rows,
                     std::string name = "");

/// Scans all n^3 triples for (x*y)*z == x*(y*z).
Check is_associative(const Magma& m);

// ---- self-map utilities ----------------------------------------------------
// A self-map of {0..n-1} is a vector f with f[i] = image of i.

bool is_idempotent_map(const std::vector<element_t>& f);

/// Least (x, y) with f(x*y) != f(x)*f(y), or nullopt if f is an endomorphism.
std::optional<std::pair<element_t, element_t>> endomorphism_witness(
    const Magma& m, const std::vector<element_t>& f);

/// All self-maps f with f(f(x)) = f(x) and f(x*y) = f(x)*f(y), found by an
/// exhaustive n^n scan. Output sorted lexicographically.
std::vector<std::vector<element_t>> idempotent_endomorphisms(const Magma& m,
                                                             std::uint64_t budget = 0);

/// All ordered pairs (a, b) of idempotent self-maps of {0..n-1} with
/// a(b(x)) = b(a(x)) for every x. Output sorted lexicographically by (a, b).
std::vector<std::pair<std::vector<element_t>, std::vector<element_t>>>
commuting_idempotent_pairs(int n, std::uint64_t budget = 0);

// ---- scan plumbing ---------------------------------------------------------

namespace scan {

// Default candidate budgets, sized for desk-scale runs.
inline constexpr std::uint64_t kSelfMapCap = 16'777'216;  // 8^8
inline constexpr std::uint64_t kPairMapCap = 3'125;       // 5^5 self-maps per side

/// base^exp, saturating at uint64 max instead of wrapping.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

/// n!, saturating at uint64 max.
std::uint64_t checked_factorial(int n);

/// Raises errc::budget unless `required <= (budget ? budget : fallback)`.
void require_budget(std::uint64_t required, std::uint64_t budget,
                    std::uint64_t fallback, const char* what);

/// Advances f through [0,n)^k in lexicographic order; false after the last.
bool next_map(std::vector<element_t>& f, int n);

}  // namespace scan

}  // namespace pentagon
