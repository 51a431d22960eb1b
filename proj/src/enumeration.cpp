#include "pentagon/enumeration.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "pentagon/group_solution.hpp"

namespace pentagon {

namespace {

std::string set_carrier(int n) { return "set(" + std::to_string(n) + ")"; }

std::string carrier_of(const Magma& m) {
  return m.name.empty() ? set_carrier(m.n) : m.name;
}

void fill_profiles(EnumerationReport& report) {
  report.profiles.reserve(report.solutions.size());
  for (const PairMap& s : report.solutions) report.profiles.push_back(profile(s));
}

void sort_and_check_unique(std::vector<PairMap>& solutions, const char* what) {
  std::sort(solutions.begin(), solutions.end());
  if (std::adjacent_find(solutions.begin(), solutions.end()) != solutions.end())
    fail(errc::internal, std::string{what} + " produced duplicate solutions");
}

}  // namespace

bool ProfileFilter::matches(const SolutionProfile& p) const {
  auto ok = [](const std::optional<bool>& want, bool have) {
    return !want || *want == have;
  };
  return ok(is_solution, p.is_solution) && ok(is_reversed, p.is_reversed) &&
         ok(is_invertible, p.is_invertible) &&
         ok(is_commutative, p.is_commutative) &&
         ok(is_cocommutative, p.is_cocommutative);
}

EnumerationReport enumerate_raw(int n, std::uint64_t budget) {
  if (n <= 0) fail(errc::precondition, "carrier size must be positive");
  const std::uint64_t cells = static_cast<std::uint64_t>(n) * n;
  scan::require_budget(scan::checked_pow(cells, cells), budget,
                       scan::kRawScanCap, "pair-table scan");

  EnumerationReport report;
  report.carrier = set_carrier(n);
  report.method = "raw";

  // One odometer over dot || star; lexicographic order matches PairMap order.
  std::vector<element_t> tables(2 * cells, 0);
  PairMap s;
  s.n = n;
  do {
    s.dot_table.assign(tables.begin(), tables.begin() + cells);
    s.star_table.assign(tables.begin() + cells, tables.end());
    if (is_solution_direct(s).ok) report.solutions.push_back(s);
  } while (scan::next_map(tables, n));

  fill_profiles(report);
  return report;
}

EnumerationReport enumerate_with_dot(const Magma& dot, std::uint64_t budget) {
  const std::uint64_t cells = static_cast<std::uint64_t>(dot.n) * dot.n;
  scan::require_budget(scan::checked_pow(dot.n, cells), budget,
                       scan::kStarTableCap, "star-table scan");

  EnumerationReport report;
  report.carrier = carrier_of(dot);
  report.method = "raw";

  PairMap s;
  s.n = dot.n;
  s.dot_table = dot.table;
  s.star_table.assign(cells, 0);
  do {
    if (is_solution_direct(s).ok) report.solutions.push_back(s);
  } while (scan::next_map(s.star_table, dot.n));

  fill_profiles(report);
  return report;
}

namespace {

// Scans the normalized theta_1 candidates f with f[identity] = identity and
// f[pinned] = pinned_value (no pin when pinned < 0), appending the star
// tables that satisfy conditions (2) and (3).
void theta_stripe(const Group& g, int pinned, element_t pinned_value,
                  std::vector<PairMap>& out) {
  const int n = g.order();
  std::vector<element_t> f(n, 0);
  f[g.identity] = g.identity;
  if (pinned >= 0) f[pinned] = pinned_value;

  // Free positions advance odometer-style; identity and pin stay put.
  std::vector<int> free_pos;
  for (int i = 0; i < n; ++i)
    if (i != g.identity && i != pinned) free_pos.push_back(i);

  std::vector<element_t> star(static_cast<std::size_t>(n) * n);
  auto at = [n](std::vector<element_t>& t, element_t x, element_t y) -> element_t& {
    return t[static_cast<std::size_t>(x) * n + y];
  };

  while (true) {
    // theta_1 is idempotent for every solution; reject early.
    bool feasible = true;
    for (element_t y = 0; y < n && feasible; ++y) feasible = f[f[y]] == f[y];

    if (feasible) {
      for (element_t x = 0; x < n; ++x) {
        const element_t fx_inv = g.inv(f[x]);
        for (element_t y = 0; y < n; ++y)
          at(star, x, y) = g.op(fx_inv, f[g.op(x, y)]);
      }
      bool ok = true;
      // Condition (2): star(x,y) . star(xy,z) = star(x, yz).
      for (element_t x = 0; x < n && ok; ++x)
        for (element_t y = 0; y < n && ok; ++y)
          for (element_t z = 0; z < n && ok; ++z)
            ok = g.op(at(star, x, y), at(star, g.op(x, y), z)) ==
                 at(star, x, g.op(y, z));
      // Condition (3): star(x,y) * star(xy,z) = star(y,z).
      for (element_t x = 0; x < n && ok; ++x)
        for (element_t y = 0; y < n && ok; ++y)
          for (element_t z = 0; z < n && ok; ++z)
            ok = at(star, at(star, x, y), at(star, g.op(x, y), z)) ==
                 at(star, y, z);
      if (ok) {
        PairMap s;
        s.n = n;
        s.dot_table = g.magma.table;
        s.star_table = star;
        out.push_back(std::move(s));
      }
    }

    // Advance the free positions.
    std::size_t i = free_pos.size();
    while (i > 0) {
      --i;
      if (++f[free_pos[i]] < n) break;
      f[free_pos[i]] = 0;
      if (i == 0) return;
    }
    if (free_pos.empty()) return;
  }
}

}  // namespace

EnumerationReport enumerate_on_group(const Group& g, std::uint64_t budget,
                                     int workers) {
  const int n = g.order();
  scan::require_budget(scan::checked_pow(n, n), budget, scan::kThetaScanCap,
                       "theta_1 scan");

  EnumerationReport report;
  report.carrier = carrier_of(g.magma);
  report.method = "theta-scan";

  int pinned = -1;
  for (int i = 0; i < n && pinned < 0; ++i)
    if (i != g.identity) pinned = i;

  if (pinned < 0) {
    theta_stripe(g, -1, 0, report.solutions);  // order 1: single candidate
  } else if (workers <= 1) {
    for (element_t v = 0; v < n; ++v)
      theta_stripe(g, pinned, v, report.solutions);
  } else {
    workers = std::min(workers, n);
    std::vector<std::vector<PairMap>> found(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (element_t v = w; v < n; v += workers)
          theta_stripe(g, pinned, v, found[w]);
      });
    for (auto& t : pool) t.join();
    for (auto& part : found)
      for (auto& s : part) report.solutions.push_back(std::move(s));
  }

  sort_and_check_unique(report.solutions, "theta scan");
  fill_profiles(report);
  return report;
}

EnumerationReport enumerate_by_theorem(const Group& g) {
  EnumerationReport report;
  report.carrier = carrier_of(g.magma);
  report.method = "theorem";

  for (const Subgroup& K : normal_subgroups(g))
    for (const std::vector<element_t>& reps : representative_systems(g, K)) {
      GroupSolution gs = coset_solution(g, K, reps);
      CosetDatum d = decompose(gs);
      if (d.K.elements != K.elements || d.R != reps)
        fail(errc::internal, "decompose did not return the generating coset data");
      report.solutions.push_back(gs.pairmap());
    }

  sort_and_check_unique(report.solutions, "theorem enumeration");
  fill_profiles(report);
  return report;
}

std::uint64_t count_by_formula(const Group& g) {
  std::uint64_t total = 0;
  for (const Subgroup& K : normal_subgroups(g)) {
    const std::uint64_t index = g.order() / K.size();
    total += scan::checked_pow(K.size(), index - 1);
  }
  return total;
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(int i, int j) { parent[find(i)] = find(j); }
};

}  // namespace

Classification classify_solutions(const std::vector<PairMap>& solutions,
                                  std::uint64_t budget,
                                  std::uint64_t schedule_seed) {
  Classification result;
  const int count = static_cast<int>(solutions.size());
  if (count == 0) return result;

  const int n = solutions.front().n;
  for (const PairMap& s : solutions)
    if (s.n != n) fail(errc::precondition, "solutions live on different carriers");
  scan::require_budget(scan::checked_factorial(n), budget, scan::kClassifyCap,
                       "classification bijection search");

  std::vector<SolutionProfile> profiles;
  profiles.reserve(solutions.size());
  for (const PairMap& s : solutions) profiles.push_back(profile(s));

  std::vector<std::pair<int, int>> probes;
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) probes.emplace_back(i, j);
  if (schedule_seed != 0) {
    std::mt19937_64 rng(schedule_seed);
    std::shuffle(probes.begin(), probes.end(), rng);
  }

  UnionFind dsu(count);
  for (auto [i, j] : probes) {
    if (dsu.find(i) == dsu.find(j)) continue;
    if (profiles[i] != profiles[j]) continue;  // profiles are invariants
    if (are_equivalent(solutions[i], solutions[j], budget)) dsu.unite(i, j);
  }

  result.class_of.assign(count, -1);
  std::vector<int> label(count, -1);
  for (int i = 0; i < count; ++i) {
    const int root = dsu.find(i);
    if (label[root] < 0) {
      label[root] = static_cast<int>(result.representatives.size());
      result.representatives.push_back(i);
    }
    result.class_of[i] = label[root];
  }
  return result;
}

EnumerationReport classify(EnumerationReport report, std::uint64_t budget,
                           std::uint64_t schedule_seed) {
  report.classes = classify_solutions(report.solutions, budget, schedule_seed);
  return report;
}

std::vector<Magma> star_group_search(const Group& g_star, std::uint64_t budget) {
  const int n = g_star.order();
  const std::uint64_t cells = static_cast<std::uint64_t>(n) * n;
  const std::uint64_t required = scan::checked_pow(n, cells);
  const std::uint64_t cap = budget ? budget : scan::kStarTableCap;

  if (required <= cap) {
    std::vector<Magma> out;
    PairMap s;
    s.n = n;
    s.dot_table.assign(cells, 0);
    s.star_table = g_star.magma.table;
    do {
      if (is_solution_direct(s).ok) {
        Magma m;
        m.n = n;
        m.table = s.dot_table;
        out.push_back(std::move(m));
      }
    } while (scan::next_map(s.dot_table, n));
    return out;  // odometer order is lexicographic
  }

  if (!is_elementary_abelian_2(g_star))
    scan::require_budget(required, budget, scan::kStarTableCap, "dot-table scan");

  // Forward verification of the predicted table: dot(x,y) = x.
  PairMap s;
  s.n = n;
  s.dot_table.resize(cells);
  for (element_t x = 0; x < n; ++x)
    for (element_t y = 0; y < n; ++y)
      s.dot_table[static_cast<std::size_t>(x) * n + y] = x;
  s.star_table = g_star.magma.table;
  if (!is_solution_direct(s).ok)
    fail(errc::internal, "left projection failed on an elementary abelian 2-group");
  Magma m;
  m.n = n;
  m.table = s.dot_table;
  return {m};
}

EnumerationReport filter_profiles(const EnumerationReport& report,
                                  const ProfileFilter& filter) {
  EnumerationReport out;
  out.carrier = report.carrier;
  out.method = report.method;
  for (std::size_t i = 0; i < report.solutions.size(); ++i)
    if (filter.matches(report.profiles[i])) {
      out.solutions.push_back(report.solutions[i]);
      out.profiles.push_back(report.profiles[i]);
    }
  return out;
}

}  // namespace pentagon
