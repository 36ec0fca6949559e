#ifndef PCTSP_MATCHING_HPP
#define PCTSP_MATCHING_HPP

#include <utility>
#include <vector>

#include "pctsp/instance.hpp"

namespace pctsp {

/// Perfect matching between two equal-size color classes.
struct BipartiteMatching {
  int left_class = -1;
  int right_class = -1;
  std::vector<std::pair<int, int>> pairs;  // (left vertex, right vertex)
  double cost = 0.0;
};

/// Minimum-cost perfect matching on an s x s cost matrix (row-major).
/// Returns the column assigned to each row. Among all optimal assignments
/// the lexicographically smallest row->column vector is returned.
std::vector<int> assignment_problem(const std::vector<double>& cost, int s);

/// Minimum-cost perfect matching between classes a and b of the instance.
/// Deterministic: pairs are sorted by left vertex, and ties between optima
/// resolve to the lexicographically smallest pair list.
BipartiteMatching min_cost_matching(const Instance& inst, int a, int b);

/// k x k row-major matrix of pairwise matching costs (zero diagonal).
std::vector<double> matching_cost_matrix(const Instance& inst);

}  // namespace pctsp

#endif
