#include "pctsp/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "pctsp/matching.hpp"

namespace pctsp {

SolveReport fixed_order_tour(const Instance& inst, const ClassOrder& sigma,
                             const TspSubroutine& sub) {
  inst.validate();
  const int k = inst.k;
  if (!is_permutation_of_n(sigma.sigma, k)) {
    throw std::invalid_argument("sigma must be a permutation of [0, k)");
  }

  SolveReport report;
  report.sigma = sigma;
  report.subroutine_names = {sub.name, sub.name};

  // next[i] maps class sigma[i] vertices to their partner in class
  // sigma[i+1] under the i-th matching.
  const int n = inst.size();
  std::vector<std::vector<int>> next(k);
  std::vector<int> pos_in_class(n);
  const auto classes = inst.classes();
  for (int c = 0; c < k; ++c) {
    for (size_t idx = 0; idx < classes[c].size(); ++idx) {
      pos_in_class[classes[c][idx]] = static_cast<int>(idx);
    }
  }
  for (int i = 0; i < k; ++i) {
    const auto m =
        min_cost_matching(inst, sigma.sigma[i], sigma.sigma[(i + 1) % k]);
    report.matching_total += m.cost;
    next[i].resize(m.pairs.size());
    for (const auto& [left, right] : m.pairs) {
      next[i][pos_in_class[left]] = right;
    }
  }

  // Walk components of the matching union. Scanning the first class in
  // ascending order makes each representative the smallest-index vertex of
  // its component within that class.
  std::vector<char> visited(n, 0);
  std::vector<std::vector<int>> walks;   // component vertices, sigma order
  for (int start : classes[sigma.sigma[0]]) {
    if (visited[start]) continue;
    std::vector<int> walk;
    int cur = start;
    int step = 0;
    do {
      visited[cur] = 1;
      walk.push_back(cur);
      cur = next[step % k][pos_in_class[cur]];
      ++step;
    } while (cur != start || step % k != 0);
    walks.push_back(std::move(walk));
  }

  const int t = static_cast<int>(walks.size());
  std::vector<int> comp_order(t);
  if (t == 1) {
    comp_order[0] = 0;  // single component, nothing to glue
  } else {
    SquareMatrix rep(t);
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < t; ++j) {
        rep.at(i, j) = inst.distance(walks[i][0], walks[j][0]);
      }
    }
    const Tour rep_tour = sub.run(rep);
    report.representative_tour_cost = cycle_cost(rep, rep_tour.order);
    comp_order = rep_tour.order;
  }

  // Splice: drop each component's closing edge (u_C, v_C) and connect u_C
  // to the next component's representative instead.
  report.tour.order.reserve(n);
  for (int j = 0; j < t; ++j) {
    const auto& walk = walks[comp_order[j]];
    const auto& next_walk = walks[comp_order[(j + 1) % t]];
    report.tour.order.insert(report.tour.order.end(), walk.begin(), walk.end());
    const int u = walk.back();        // color sigma[k-1]
    const int v = walk.front();       // this component's representative
    const int v_next = next_walk.front();
    report.glue_overhead += inst.distance(u, v_next) - inst.distance(u, v);
  }
  report.cost = report.matching_total + report.glue_overhead;
  return report;
}

ClassOrder choose_order(const Instance& inst, const TspSubroutine& sub) {
  const int k = inst.k;
  SquareMatrix meta(k);
  meta.d = matching_cost_matrix(inst);
  const Tour t = sub.run(meta);
  return ClassOrder{t.order};
}

SolveReport solve(const Instance& inst, const TspSubroutine& sub_order,
                  const TspSubroutine& sub_glue, bool require_metric) {
  inst.validate();
  if (require_metric && inst.kind == InstanceKind::matrix) {
    const auto report = check_metric(inst);
    if (!report.is_metric) {
      throw std::domain_error(
          "instance is not metric (worst triangle violation " +
          std::to_string(report.worst_violation) + "); the approximation "
          "guarantee is void");
    }
  }
  const ClassOrder sigma = choose_order(inst, sub_order);
  SolveReport report = fixed_order_tour(inst, sigma, sub_glue);
  report.subroutine_names = {sub_order.name, sub_glue.name};
  if (sub_order.ratio_alpha && sub_glue.ratio_alpha) {
    report.guarantee = 2.0 * std::max(*sub_order.ratio_alpha, *sub_glue.ratio_alpha);
  }
  return report;
}

}  // namespace pctsp
