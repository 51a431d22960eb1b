#include "pentagon/magma.hpp"

#include <algorithm>
#include <sstream>

namespace pentagon {

Magma validate_magma(int n, const std::vector<std::vector<element_t>>& rows,
                     std::string name) {
  if (n <= 0) fail(errc::precondition, "carrier size must be positive");
  if (static_cast<int>(rows.size()) != n) {
    std::ostringstream msg;
    msg << "expected " << n << " rows, got " << rows.size();
    fail(errc::parse, msg.str());
  }
  Magma m;
  m.n = n;
  m.name = std::move(name);
  m.table.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n) {
      std::ostringstream msg;
      msg << "row " << r << " has " << rows[r].size() << " entries, expected " << n;
      fail(errc::parse, msg.str());
    }
    for (int c = 0; c < n; ++c) {
      element_t v = rows[r][c];
      if (v < 0 || v >= n) {
        std::ostringstream msg;
        msg << "entry " << v << " at (" << r << "," << c << ") outside [0," << n << ")";
        fail(errc::parse, msg.str());
      }
      m.table.push_back(v);
    }
  }
  return m;
}

Check is_associative(const Magma& m) {
  for (element_t x = 0; x < m.n; ++x)
    for (element_t y = 0; y < m.n; ++y)
      for (element_t z = 0; z < m.n; ++z)
        if (m.op(m.op(x, y), z) != m.op(x, m.op(y, z)))
          return {false, Triple{x, y, z}};
  return {true, std::nullopt};
}

bool is_idempotent_map(const std::vector<element_t>& f) {
  for (element_t x = 0; x < static_cast<element_t>(f.size()); ++x)
    if (f[f[x]] != f[x]) return false;
  return true;
}

std::optional<std::pair<element_t, element_t>> endomorphism_witness(
    const Magma& m, const std::vector<element_t>& f) {
  for (element_t x = 0; x < m.n; ++x)
    for (element_t y = 0; y < m.n; ++y)
      if (f[m.op(x, y)] != m.op(f[x], f[y])) return std::make_pair(x, y);
  return std::nullopt;
}

std::vector<std::vector<element_t>> idempotent_endomorphisms(const Magma& m,
                                                             std::uint64_t budget) {
  const std::uint64_t count = scan::checked_pow(m.n, m.n);
  scan::require_budget(count, budget, scan::kSelfMapCap, "self-map scan");
  std::vector<std::vector<element_t>> out;
  std::vector<element_t> f(m.n, 0);
  do {
    if (is_idempotent_map(f) && !endomorphism_witness(m, f)) out.push_back(f);
  } while (scan::next_map(f, m.n));
  return out;  // odometer order is already lexicographic
}

std::vector<std::pair<std::vector<element_t>, std::vector<element_t>>>
commuting_idempotent_pairs(int n, std::uint64_t budget) {
  if (n <= 0) fail(errc::precondition, "carrier size must be positive");
  const std::uint64_t count = scan::checked_pow(n, n);
  scan::require_budget(count, budget, scan::kPairMapCap, "idempotent pair scan");

  std::vector<std::vector<element_t>> idem;
  std::vector<element_t> f(n, 0);
  do {
    if (is_idempotent_map(f)) idem.push_back(f);
  } while (scan::next_map(f, n));

  std::vector<std::pair<std::vector<element_t>, std::vector<element_t>>> out;
  for (const auto& a : idem)
    for (const auto& b : idem) {
      bool commute = true;
      for (element_t x = 0; x < n && commute; ++x) commute = a[b[x]] == b[a[x]];
      if (commute) out.emplace_back(a, b);
    }
  return out;
}

namespace scan {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

std::uint64_t checked_factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) {
    if (r > UINT64_MAX / static_cast<std::uint64_t>(i)) return UINT64_MAX;
    r *= static_cast<std::uint64_t>(i);
  }
  return r;
}

void require_budget(std::uint64_t required, std::uint64_t budget,
                    std::uint64_t fallback, const char* what) {
  const std::uint64_t cap = budget ? budget : fallback;
  if (required > cap) {
    std::ostringstream msg;
    msg << what << " needs " << required << " candidates, budget is " << cap;
    fail(errc::budget, msg.str());
  }
}

bool next_map(std::vector<element_t>& f, int n) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (++f[i] < n) return true;
    f[i] = 0;
  }
  return false;
}

}  // namespace scan

const char* errc_name(errc c) {
  switch (c) {
    case errc::io: return "io";
    case errc::parse: return "parse";
    case errc::precondition: return "precondition";
    case errc::budget: return "budget";
    case errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace pentagon
