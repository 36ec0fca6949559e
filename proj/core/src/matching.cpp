#include "pctsp/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pctsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shortest augmenting paths with row/column potentials. Returns, for each
// column (1-based), the row matched to it, plus the final potentials.
void hungarian(const std::vector<double>& a, int s, std::vector<int>& p,
               std::vector<double>& u, std::vector<double>& v) {
  u.assign(s + 1, 0.0);
  v.assign(s + 1, 0.0);
  p.assign(s + 1, 0);
  std::vector<int> way(s + 1, 0);
  for (int i = 1; i <= s; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(s + 1, kInf);
    std::vector<char> used(s + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= s; ++j) {
        if (used[j]) continue;
        const double cur =
            a[static_cast<size_t>(i0 - 1) * s + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= s; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
}

// Kuhn's algorithm: can rows [from, s) be perfectly matched into free
// columns of the tight-edge graph?
bool rows_matchable(const std::vector<std::vector<int>>& adj, int s, int from,
                    const std::vector<char>& col_taken) {
  std::vector<int> col_match(s, -1);
  std::vector<char> visited(s, 0);
  auto try_row = [&](auto&& self, int row) -> bool {
    for (int j : adj[row]) {
      if (col_taken[j] || visited[j]) continue;
      visited[j] = 1;
      if (col_match[j] == -1 || self(self, col_match[j])) {
        col_match[j] = row;
        return true;
      }
    }
    return false;
  };
  for (int row = from; row < s; ++row) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!try_row(try_row, row)) return false;
  }
  return true;
}

}  // namespace

std::vector<int> assignment_problem(const std::vector<double>& cost, int s) {
  if (s <= 0) return {};
  std::vector<int> p;
  std::vector<double> u, v;
  hungarian(cost, s, p, u, v);

  // Complementary slackness: every optimal assignment uses only edges that
  // are tight against the potentials. Fix rows in ascending order to the
  // smallest column that still leaves the rest matchable.
  double scale = 0.0;
  for (double c : cost) scale = std::max(scale, std::abs(c));
  const double tol = 1e-9 * (1.0 + scale);
  std::vector<std::vector<int>> tight(s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      if (cost[static_cast<size_t>(i) * s + j] - u[i + 1] - v[j + 1] <= tol) {
        tight[i].push_back(j);
      }
    }
  }
  std::vector<int> row_to_col(s, -1);
  std::vector<char> col_taken(s, 0);
  for (int i = 0; i < s; ++i) {
    for (int j : tight[i]) {
      if (col_taken[j]) continue;
      col_taken[j] = 1;
      if (rows_matchable(tight, s, i + 1, col_taken)) {
        row_to_col[i] = j;
        break;
      }
      col_taken[j] = 0;
    }
    if (row_to_col[i] == -1) {
      // Tight graph too sparse under tol; fall back to the direct result.
      std::fill(col_taken.begin(), col_taken.end(), 0);
      for (int j = 1; j <= s; ++j) row_to_col[p[j] - 1] = j - 1;
      return row_to_col;
    }
  }
  return row_to_col;
}

BipartiteMatching min_cost_matching(const Instance& inst, int a, int b) {
  if (a == b) throw std::invalid_argument("matching requires distinct classes");
  if (a < 0 || a >= inst.k || b < 0 || b >= inst.k) {
    throw std::invalid_argument("class index out of range");
  }
  const auto classes = inst.classes();
  const auto& left = classes[a];
  const auto& right = classes[b];
  const int s = static_cast<int>(left.size());

  std::vector<double> cost(static_cast<size_t>(s) * s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      cost[static_cast<size_t>(i) * s + j] = inst.distance(left[i], right[j]);
    }
  }
  const auto row_to_col = assignment_problem(cost, s);

  BipartiteMatching m;
  m.left_class = a;
  m.right_class = b;
  m.pairs.reserve(s);
  for (int i = 0; i < s; ++i) {
    m.pairs.emplace_back(left[i], right[row_to_col[i]]);
    m.cost += cost[static_cast<size_t>(i) * s + row_to_col[i]];
  }
  return m;
}

std::vector<double> matching_cost_matrix(const Instance& inst) {
  const int k = inst.k;
  std::vector<double> meta(static_cast<size_t>(k) * k, 0.0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const double c = min_cost_matching(inst, i, j).cost;
      meta[static_cast<size_t>(i) * k + j] = c;
      meta[static_cast<size_t>(j) * k + i] = c;
    }
  }
  return meta;
}

}  // namespace pctsp
