#ifndef PCTSP_TSP_HPP
#define PCTSP_TSP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pctsp/instance.hpp"

namespace pctsp {

/// Symmetric nonnegative distance matrix with zero diagonal.
struct SquareMatrix {
  int n = 0;
  std::vector<double> d;  // row-major, n*n

  SquareMatrix() = default;
  explicit SquareMatrix(int size) : n(size), d(static_cast<size_t>(size) * size, 0.0) {}

  double& at(int i, int j) { return d[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
};

double cycle_cost(const SquareMatrix& dist, const std::vector<int>& order);

/// Held-Karp subset dynamic program. Optimal Hamiltonian cycle starting at
/// vertex 0. Throws std::length_error above the size cap.
Tour tsp_exact(const SquareMatrix& dist, int cap = 18);

/// Double-tree 2-approximation: Prim MST from vertex 0 (ties to the smaller
/// index), preorder walk shortcut to a cycle. Children visited ascending.
Tour tsp_double_tree(const SquareMatrix& dist);

/// Applies improving 2-exchanges until a full pass finds none or the pass
/// budget runs out. Never increases the cost.
Tour two_opt_improve(const SquareMatrix& dist, Tour tour, int max_passes);

/// A named TSP routine with its approximation guarantee, if any.
struct TspSubroutine {
  std::string name;
  std::optional<double> ratio_alpha;  // empty = heuristic, no guarantee
  std::optional<int> max_n;
  std::function<Tour(const SquareMatrix&)> run;
};

/// Known names: "exact", "double-tree", "double-tree-2opt", "auto".
/// "auto" runs exact up to 15 vertices and double-tree + 2-opt beyond,
/// so its guarantee is alpha = 2. Throws std::invalid_argument otherwise.
TspSubroutine make_subroutine(const std::string& name);

}  // namespace pctsp

#endif
