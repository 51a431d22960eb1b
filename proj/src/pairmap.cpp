#include "pentagon/pairmap.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace pentagon {

bool operator==(const PairMap& a, const PairMap& b) {
  return a.n == b.n && a.dot_table == b.dot_table && a.star_table == b.star_table;
}

bool operator<(const PairMap& a, const PairMap& b) {
  return std::tie(a.n, a.dot_table, a.star_table) <
         std::tie(b.n, b.dot_table, b.star_table);
}

namespace {

std::vector<element_t> checked_table(int n, const std::vector<std::vector<element_t>>& rows,
                                     const char* which) {
  if (static_cast<int>(rows.size()) != n) {
    std::ostringstream msg;
    msg << which << ": expected " << n << " rows, got " << rows.size();
    fail(errc::parse, msg.str());
  }
  std::vector<element_t> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n) {
      std::ostringstream msg;
      msg << which << ": row " << r << " has " << rows[r].size() << " entries, expected " << n;
      fail(errc::parse, msg.str());
    }
    for (int c = 0; c < n; ++c) {
      element_t v = rows[r][c];
      if (v < 0 || v >= n) {
        std::ostringstream msg;
        msg << which << ": entry " << v << " at (" << r << "," << c << ") outside [0," << n << ")";
        fail(errc::parse, msg.str());
      }
      table.push_back(v);
    }
  }
  return table;
}

}  // namespace

PairMap make_pairmap(int n, const std::vector<std::vector<element_t>>& dot_rows,
                     const std::vector<std::vector<element_t>>& star_rows,
                     std::string name) {
  if (n <= 0) fail(errc::precondition, "carrier size must be positive");
  PairMap s;
  s.n = n;
  s.dot_table = checked_table(n, dot_rows, "dot");
  s.star_table = checked_table(n, star_rows, "star");
  s.name = std::move(name);
  return s;
}

PairMap identity_pairmap(int n) {
  PairMap s;
  s.n = n;
  s.dot_table.resize(static_cast<std::size_t>(n) * n);
  s.star_table.resize(static_cast<std::size_t>(n) * n);
  for (element_t x = 0; x < n; ++x)
    for (element_t y = 0; y < n; ++y) {
      s.dot_table[static_cast<std::size_t>(x) * n + y] = x;
      s.star_table[static_cast<std::size_t>(x) * n + y] = y;
    }
  return s;
}

PairMap flip_pairmap(int n) {
  PairMap s = identity_pairmap(n);
  std::swap(s.dot_table, s.star_table);
  return s;
}

Triple act12(const PairMap& s, Triple t) { return {s.dot(t.x, t.y), s.star(t.x, t.y), t.z}; }
Triple act23(const PairMap& s, Triple t) { return {t.x, s.dot(t.y, t.z), s.star(t.y, t.z)}; }
Triple act13(const PairMap& s, Triple t) { return {s.dot(t.x, t.z), t.y, s.star(t.x, t.z)}; }

Check is_solution_direct(const PairMap& s) {
  for (element_t x = 0; x < s.n; ++x)
    for (element_t y = 0; y < s.n; ++y)
      for (element_t z = 0; z < s.n; ++z) {
        Triple t{x, y, z};
        if (act23(s, act13(s, act12(s, t))) != act12(s, act23(s, t)))
          return {false, t};
      }
  return {true, std::nullopt};
}

Check is_reversed_solution(const PairMap& s) {
  for (element_t x = 0; x < s.n; ++x)
    for (element_t y = 0; y < s.n; ++y)
      for (element_t z = 0; z < s.n; ++z) {
        Triple t{x, y, z};
        if (act12(s, act13(s, act23(s, t))) != act23(s, act12(s, t)))
          return {false, t};
      }
  return {true, std::nullopt};
}

ConditionCheck is_solution_conditions(const PairMap& s) {
  for (element_t x = 0; x < s.n; ++x)
    for (element_t y = 0; y < s.n; ++y)
      for (element_t z = 0; z < s.n; ++z)
        if (s.dot(s.dot(x, y), z) != s.dot(x, s.dot(y, z)))
          return {false, 1, Triple{x, y, z}};
  for (element_t x = 0; x < s.n; ++x)
    for (element_t y = 0; y < s.n; ++y)
      for (element_t z = 0; z < s.n; ++z)
        if (s.dot(s.star(x, y), s.star(s.dot(x, y), z)) != s.star(x, s.dot(y, z)))
          return {false, 2, Triple{x, y, z}};
  for (element_t x = 0; x < s.n; ++x)
    for (element_t y = 0; y < s.n; ++y)
      for (element_t z = 0; z < s.n; ++z)
        if (s.star(s.star(x, y), s.star(s.dot(x, y), z)) != s.star(y, z))
          return {false, 3, Triple{x, y, z}};
  return {true, 0, std::nullopt};
}

PairMap tau_conjugate(const PairMap& s) {
  PairMap r;
  r.n = s.n;
  r.dot_table.resize(s.dot_table.size());
  r.star_table.resize(s.star_table.size());
  for (element_t x = 0; x < s.n; ++x)
    for (element_t y = 0; y < s.n; ++y) {
      r.dot_table[static_cast<std::size_t>(x) * s.n + y] = s.star(y, x);
      r.star_table[static_cast<std::size_t>(x) * s.n + y] = s.dot(y, x);
    }
  return r;
}

bool is_invertible(const PairMap& s) {
  std::vector<char> hit(static_cast<std::size_t>(s.n) * s.n, 0);
  for (element_t x = 0; x < s.n; ++x)
    for (element_t y = 0; y < s.n; ++y) {
      std::size_t image = static_cast<std::size_t>(s.dot(x, y)) * s.n + s.star(x, y);
      if (hit[image]) return false;
      hit[image] = 1;
    }
  return true;
}

PairMap inverse(const PairMap& s) {
  if (!is_invertible(s)) fail(errc::precondition, "map is not invertible");
  PairMap r;
  r.n = s.n;
  r.dot_table.resize(s.dot_table.size());
  r.star_table.resize(s.star_table.size());
  for (element_t x = 0; x < s.n; ++x)
    for (element_t y = 0; y < s.n; ++y) {
      std::size_t image = static_cast<std::size_t>(s.dot(x, y)) * s.n + s.star(x, y);
      r.dot_table[image] = x;
      r.star_table[image] = y;
    }
  return r;
}

PairMap opposite(const PairMap& s) { return tau_conjugate(inverse(s)); }

bool is_commutative(const PairMap& s) {
  for (element_t x = 0; x < s.n; ++x)
    for (element_t y = 0; y < s.n; ++y)
      for (element_t z = 0; z < s.n; ++z) {
        Triple t{x, y, z};
        if (act12(s, act13(s, t)) != act13(s, act12(s, t))) return false;
      }
  return true;
}

bool is_cocommutative(const PairMap& s) {
  for (element_t x = 0; x < s.n; ++x)
    for (element_t y = 0; y < s.n; ++y)
      for (element_t z = 0; z < s.n; ++z) {
        Triple t{x, y, z};
        if (act13(s, act23(s, t)) != act23(s, act13(s, t))) return false;
      }
  return true;
}

SolutionProfile profile(const PairMap& s) {
  SolutionProfile p;
  p.is_solution = is_solution_direct(s).ok;
  p.is_reversed = is_reversed_solution(s).ok;
  p.is_invertible = is_invertible(s);
  p.is_commutative = is_commutative(s);
  p.is_cocommutative = is_cocommutative(s);
  return p;
}

PairMap apply_bijection(const PairMap& s, const std::vector<element_t>& eta) {
  if (static_cast<int>(eta.size()) != s.n)
    fail(errc::precondition, "bijection size mismatch");
  std::vector<element_t> inv(s.n, -1);
  for (element_t x = 0; x < s.n; ++x) {
    if (eta[x] < 0 || eta[x] >= s.n || inv[eta[x]] != -1)
      fail(errc::precondition, "not a bijection");
    inv[eta[x]] = x;
  }
  PairMap r;
  r.n = s.n;
  r.dot_table.resize(s.dot_table.size());
  r.star_table.resize(s.star_table.size());
  for (element_t u = 0; u < s.n; ++u)
    for (element_t v = 0; v < s.n; ++v) {
      r.dot_table[static_cast<std::size_t>(u) * s.n + v] = eta[s.dot(inv[u], inv[v])];
      r.star_table[static_cast<std::size_t>(u) * s.n + v] = eta[s.star(inv[u], inv[v])];
    }
  return r;
}

namespace {

// Backtracking search with forced-image propagation. Whenever x and y both
// have images, the image of x.y (and x*y) is determined; a clash with an
// existing image, or with injectivity, prunes the branch.
struct EquivalenceSearch {
  const PairMap& s;
  const PairMap& r;
  int n;
  std::vector<element_t> eta;       // image under the bijection, -1 = unset
  std::vector<element_t> preimage;  // inverse assignment, -1 = unset
  std::vector<element_t> assigned;  // assignment order, doubles as undo trail

  EquivalenceSearch(const PairMap& s_, const PairMap& r_)
      : s(s_), r(r_), n(s_.n), eta(n, -1), preimage(n, -1) {}

  // Records eta[v] = w unless it clashes with an existing image or with
  // injectivity. Returns false on clash.
  bool push(element_t v, element_t w) {
    if (eta[v] != -1) return eta[v] == w;
    if (preimage[w] != -1) return false;
    eta[v] = w;
    preimage[w] = v;
    assigned.push_back(v);
    return true;
  }

  // Images of x.y and x*y forced by the images of x and y.
  bool derive(element_t x, element_t y) {
    return push(s.dot(x, y), r.dot(eta[x], eta[y])) &&
           push(s.star(x, y), r.star(eta[x], eta[y]));
  }

  // Extends the assignment with eta[v] = w plus every consequence; on clash
  // the state is rolled back. Returns whether the extension survived.
  bool assign(element_t v, element_t w) {
    std::size_t checkpoint = assigned.size();
    std::size_t cursor = checkpoint;
    bool ok = push(v, w);
    while (ok && cursor < assigned.size()) {
      element_t a = assigned[cursor++];
      for (std::size_t i = 0; ok && i < assigned.size(); ++i)
        ok = derive(a, assigned[i]) && derive(assigned[i], a);
    }
    if (!ok) unwind(checkpoint);
    return ok;
  }

  void unwind(std::size_t checkpoint) {
    while (assigned.size() > checkpoint) {
      element_t v = assigned.back();
      assigned.pop_back();
      preimage[eta[v]] = -1;
      eta[v] = -1;
    }
  }

  bool solve() {
    element_t v = -1;
    for (element_t i = 0; i < n; ++i)
      if (eta[i] == -1) {
        v = i;
        break;
      }
    if (v == -1) return true;
    for (element_t w = 0; w < n; ++w) {
      if (preimage[w] != -1) continue;
      std::size_t checkpoint = assigned.size();
      if (assign(v, w)) {
        if (solve()) return true;
        unwind(checkpoint);
      }
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<element_t>> are_equivalent(const PairMap& s,
                                                     const PairMap& r,
                                                     std::uint64_t budget) {
  if (s.n != r.n) fail(errc::precondition, "carrier sizes differ");
  scan::require_budget(scan::checked_factorial(s.n), budget,
                       kEquivalenceSearchCap, "bijection search");
  EquivalenceSearch search(s, r);
  if (!search.solve()) return std::nullopt;
  return search.eta;
}

}  // namespace pentagon
