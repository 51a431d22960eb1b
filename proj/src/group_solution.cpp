#include "pentagon/group_solution.hpp"

#include <algorithm>
#include <sstream>

namespace pentagon {

PairMap GroupSolution::pairmap() const {
  PairMap s;
  s.n = group.order();
  s.dot_table = group.magma.table;
  s.star_table = theta;
  s.name = name;
  return s;
}

GroupSolution theta_from_pairmap(const PairMap& s, const Group& g) {
  if (s.n != g.order()) fail(errc::precondition, "carrier sizes differ");
  if (s.dot_table != g.magma.table)
    fail(errc::precondition, "dot component is not the group operation");
  ConditionCheck c = is_solution_conditions(s);
  if (!c.ok) {
    std::ostringstream msg;
    msg << "not a solution: condition " << c.condition << " fails at ("
        << c.witness->x << "," << c.witness->y << "," << c.witness->z << ")";
    fail(errc::precondition, msg.str());
  }
  GroupSolution gs;
  gs.group = g;
  gs.theta = s.star_table;
  gs.name = s.name;
  return gs;
}

std::vector<element_t> theta_one(const GroupSolution& gs) {
  const Group& g = gs.group;
  const int n = g.order();
  std::vector<element_t> t1(n);
  for (element_t y = 0; y < n; ++y) t1[y] = gs.theta_at(g.identity, y);
  // theta_x(y) = theta_1(x)^-1 theta_1(xy) must reconstruct every row.
  for (element_t x = 0; x < n; ++x)
    for (element_t y = 0; y < n; ++y)
      if (gs.theta_at(x, y) != g.op(g.inv(t1[x]), t1[g.op(x, y)]))
        fail(errc::internal, "theta table does not match its theta_1 row");
  return t1;
}

Subgroup kernel(const GroupSolution& gs) {
  std::vector<element_t> t1 = theta_one(gs);
  std::vector<element_t> members;
  for (element_t x = 0; x < gs.order(); ++x)
    if (t1[x] == gs.group.identity) members.push_back(x);
  try {
    Subgroup k = subgroup_from_elements(gs.group, std::move(members));
    if (!k.normal) fail(errc::internal, "kernel is not normal");
    return k;
  } catch (const error& e) {
    if (e.code() == errc::internal) throw;
    // The kernel of a valid solution is always a subgroup, so this is
    // corruption, not bad input.
    fail(errc::internal, std::string{"kernel is not a subgroup: "} + e.what());
  }
}

GroupSolution coset_solution(const Group& g, const Subgroup& K,
                             const std::vector<element_t>& reps) {
  const int n = g.order();
  Subgroup checked = subgroup_from_elements(g, K.elements);
  if (!checked.normal) fail(errc::precondition, "subgroup is not normal");

  std::vector<element_t> sorted = reps;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (static_cast<int>(sorted.size()) != static_cast<int>(reps.size()))
    fail(errc::precondition, "representative list has duplicates");
  for (element_t r : sorted)
    if (r < 0 || r >= n) fail(errc::precondition, "representative out of range");
  if (!std::binary_search(sorted.begin(), sorted.end(), g.identity))
    fail(errc::precondition, "representative system must contain the identity");

  // mu(x) = the unique representative r with Kx = Kr, i.e. x r^-1 in K.
  std::vector<element_t> mu(n, -1);
  for (element_t x = 0; x < n; ++x) {
    for (element_t r : sorted)
      if (checked.contains(g.op(x, g.inv(r)))) {
        if (mu[x] != -1)
          fail(errc::precondition, "two representatives share a coset");
        mu[x] = r;
      }
    if (mu[x] == -1)
      fail(errc::precondition, "some coset has no representative");
  }

  GroupSolution gs;
  gs.group = g;
  gs.theta.resize(static_cast<std::size_t>(n) * n);
  for (element_t x = 0; x < n; ++x)
    for (element_t y = 0; y < n; ++y)
      gs.theta[static_cast<std::size_t>(x) * n + y] =
          g.op(g.inv(mu[x]), mu[g.op(x, y)]);

  ConditionCheck c = is_solution_conditions(gs.pairmap());
  if (!c.ok) fail(errc::internal, "coset construction produced a non-solution");
  return gs;
}

CosetDatum decompose(const GroupSolution& gs) {
  const Group& g = gs.group;
  std::vector<element_t> t1 = theta_one(gs);

  CosetDatum d;
  d.K = kernel(gs);
  d.mu = t1;
  d.R = t1;
  std::sort(d.R.begin(), d.R.end());
  d.R.erase(std::unique(d.R.begin(), d.R.end()), d.R.end());

  const int index = g.order() / d.K.size();
  if (static_cast<int>(d.R.size()) != index)
    fail(errc::internal, "theta_1 image does not have one member per coset");
  for (element_t x = 0; x < g.order(); ++x)
    if (!d.K.contains(g.op(t1[x], g.inv(x))))
      fail(errc::internal, "theta_1(x) left its coset");

  GroupSolution rebuilt = coset_solution(g, d.K, d.R);
  if (rebuilt.theta != gs.theta)
    fail(errc::internal, "coset data does not rebuild the solution");
  return d;
}

}  // namespace pentagon
