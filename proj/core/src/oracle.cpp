#include "pctsp/oracle.hpp"

#include <algorithm>
#include <limits>

namespace pctsp {

namespace {

struct SearchState {
  const Instance* inst;
  std::vector<std::vector<int>> classes;
  std::vector<int> sigma;
  std::vector<char> used;
  std::vector<int> partial;
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_order;
  std::vector<int> best_sigma;
  std::int64_t explored = 0;
  std::int64_t budget = -1;
  bool aborted = false;

  void dfs(int depth, double cost) {
    if (aborted) return;
    ++explored;
    if (budget >= 0 && explored > budget) {
      aborted = true;
      return;
    }
    const int n = inst->size();
    if (cost >= best) return;
    if (depth == n) {
      const double total = cost + inst->distance(partial.back(), partial[0]);
      if (total < best) {
        best = total;
        best_order = partial;
        best_sigma = sigma;
      }
      return;
    }
    const int cls = sigma[depth % static_cast<int>(sigma.size())];
    for (int v : classes[cls]) {
      if (used[v]) continue;
      used[v] = 1;
      partial.push_back(v);
      dfs(depth + 1, cost + inst->distance(partial[partial.size() - 2], v));
      partial.pop_back();
      used[v] = 0;
    }
  }
};

}  // namespace

OracleResult solve_exact(const Instance& inst, std::int64_t budget) {
  inst.validate();
  const int n = inst.size();
  const int k = inst.k;

  SearchState state;
  state.inst = &inst;
  state.classes = inst.classes();
  state.used.assign(n, 0);
  state.budget = budget;

  // Rotation symmetry: any sigma-tour can be rotated so vertex 0 sits at
  // position 0, which pins sigma(0) to its color.
  const int c0 = inst.colors[0];
  std::vector<int> rest;
  for (int c = 0; c < k; ++c) {
    if (c != c0) rest.push_back(c);
  }
  std::sort(rest.begin(), rest.end());
  do {
    state.sigma.assign(1, c0);
    state.sigma.insert(state.sigma.end(), rest.begin(), rest.end());
    state.used[0] = 1;
    state.partial.assign(1, 0);
    state.dfs(1, 0.0);
    state.used[0] = 0;
    if (state.aborted) break;
  } while (std::next_permutation(rest.begin(), rest.end()));

  OracleResult result;
  result.tour.order = state.best_order;
  result.sigma.sigma = state.best_sigma;
  result.cost = state.best;
  result.explored = state.explored;
  result.optimal = !state.aborted;
  return result;
}

}  // namespace pctsp
