#include "pctsp/tsp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pctsp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double cycle_cost(const SquareMatrix& dist, const std::vector<int>& order) {
  const int m = static_cast<int>(order.size());
  double c = 0.0;
  for (int i = 0; i < m; ++i) {
    c += dist.at(order[i], order[(i + 1) % m]);
  }
  return c;
}

Tour tsp_exact(const SquareMatrix& dist, int cap) {
  const int m = dist.n;
  if (m > cap) {
    throw std::length_error("tsp_exact: instance size " + std::to_string(m) +
                            " exceeds cap " + std::to_string(cap));
  }
  if (m <= 2) {
    Tour t;
    for (int i = 0; i < m; ++i) t.order.push_back(i);
    return t;
  }
  // dp[mask][v]: cheapest path from 0 through `mask` (over vertices 1..m-1)
  // ending at v.
  const int r = m - 1;
  const size_t masks = size_t{1} << r;
  std::vector<double> dp(masks * r, kInf);
  std::vector<int> parent(masks * r, -1);
  for (int v = 0; v < r; ++v) {
    dp[(size_t{1} << v) * r + v] = dist.at(0, v + 1);
  }
  for (size_t mask = 1; mask < masks; ++mask) {
    for (int v = 0; v < r; ++v) {
      if (!(mask & (size_t{1} << v))) continue;
      const double cur = dp[mask * r + v];
      if (cur == kInf) continue;
      for (int w = 0; w < r; ++w) {
        if (mask & (size_t{1} << w)) continue;
        const size_t nmask = mask | (size_t{1} << w);
        const double cand = cur + dist.at(v + 1, w + 1);
        if (cand < dp[nmask * r + w]) {
          dp[nmask * r + w] = cand;
          parent[nmask * r + w] = v;
        }
      }
    }
  }
  const size_t full = masks - 1;
  double best = kInf;
  int best_end = 0;
  for (int v = 0; v < r; ++v) {
    const double cand = dp[full * r + v] + dist.at(v + 1, 0);
    if (cand < best) {
      best = cand;
      best_end = v;
    }
  }
  Tour t;
  t.order.resize(m);
  size_t mask = full;
  int v = best_end;
  for (int i = m - 1; i >= 1; --i) {
    t.order[i] = v + 1;
    const int prev = parent[mask * r + v];
    mask &= ~(size_t{1} << v);
    v = prev;
  }
  t.order[0] = 0;
  return t;
}

Tour tsp_double_tree(const SquareMatrix& dist) {
  const int m = dist.n;
  Tour t;
  if (m <= 2) {
    for (int i = 0; i < m; ++i) t.order.push_back(i);
    return t;
  }
  // Prim from vertex 0; strict < keeps the smaller-index parent on ties.
  std::vector<double> key(m, kInf);
  std::vector<int> parent(m, -1);
  std::vector<char> in_tree(m, 0);
  key[0] = 0.0;
  for (int step = 0; step < m; ++step) {
    int u = -1;
    for (int v = 0; v < m; ++v) {
      if (!in_tree[v] && (u == -1 || key[v] < key[u])) u = v;
    }
    in_tree[u] = 1;
    for (int v = 0; v < m; ++v) {
      if (!in_tree[v] && dist.at(u, v) < key[v]) {
        key[v] = dist.at(u, v);
        parent[v] = u;
      }
    }
  }
  std::vector<std::vector<int>> children(m);
  for (int v = 1; v < m; ++v) children[parent[v]].push_back(v);
  for (auto& c : children) std::sort(c.begin(), c.end());

  t.order.reserve(m);
  auto preorder = [&](auto&& self, int v) -> void {
    t.order.push_back(v);
    for (int c : children[v]) self(self, c);
  };
  preorder(preorder, 0);
  return t;
}

Tour two_opt_improve(const SquareMatrix& dist, Tour tour, int max_passes) {
  const int m = static_cast<int>(tour.order.size());
  if (m < 4) return tour;
  for (int pass = 0; pass < max_passes; ++pass) {
    bool improved = false;
    for (int i = 0; i < m - 1; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (i == 0 && j == m - 1) continue;  // same edge pair
        const int a = tour.order[i], b = tour.order[(i + 1) % m];
        const int c = tour.order[j], d = tour.order[(j + 1) % m];
        const double delta =
            dist.at(a, c) + dist.at(b, d) - dist.at(a, b) - dist.at(c, d);
        if (delta < -1e-12) {
          std::reverse(tour.order.begin() + i + 1, tour.order.begin() + j + 1);
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  return tour;
}

TspSubroutine make_subroutine(const std::string& name) {
  TspSubroutine sub;
  sub.name = name;
  if (name == "exact") {
    sub.ratio_alpha = 1.0;
    sub.max_n = 18;
    sub.run = [](const SquareMatrix& d) { return tsp_exact(d); };
  } else if (name == "double-tree") {
    sub.ratio_alpha = 2.0;
    sub.run = [](const SquareMatrix& d) { return tsp_double_tree(d); };
  } else if (name == "double-tree-2opt") {
    sub.ratio_alpha = 2.0;
    sub.run = [](const SquareMatrix& d) {
      return two_opt_improve(d, tsp_double_tree(d), 50);
    };
  } else if (name == "auto") {
    sub.ratio_alpha = 2.0;
    sub.run = [](const SquareMatrix& d) {
      if (d.n <= 15) return tsp_exact(d);
      return two_opt_improve(d, tsp_double_tree(d), 50);
    };
  } else {
    throw std::invalid_argument("unknown TSP subroutine: " + name);
  }
  return sub;
}

}  // namespace pctsp
