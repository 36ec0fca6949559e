#ifndef PCTSP_SOLVER_HPP
#define PCTSP_SOLVER_HPP

#include <optional>
#include <string>
#include <utility>

#include "pctsp/instance.hpp"
#include "pctsp/tsp.hpp"

namespace pctsp {

struct SolveReport {
  Tour tour;
  ClassOrder sigma;
  double cost = 0.0;
  double matching_total = 0.0;
  double glue_overhead = 0.0;
  double representative_tour_cost = 0.0;
  std::pair<std::string, std::string> subroutine_names;  // (order, glue)
  std::optional<double> guarantee;                       // empty = heuristic
};

/// Fixed-order stage: compute the k class-adjacent matchings, read the
/// sigma-cycle components off their union, splice them into one
/// Hamiltonian sigma-cycle along a tour of component representatives.
/// The identity cost = matching_total + glue_overhead holds exactly.
SolveReport fixed_order_tour(const Instance& inst, const ClassOrder& sigma,
                             const TspSubroutine& sub);

/// Ordering stage: tour of the complete meta-graph on classes whose edge
/// weights are pairwise matching costs.
ClassOrder choose_order(const Instance& inst, const TspSubroutine& sub);

/// End-to-end approximation: choose_order then fixed_order_tour. Reports a
/// 2*max(alpha) guarantee when both subroutines carry one. With
/// require_metric, a non-metric matrix instance throws std::domain_error.
SolveReport solve(const Instance& inst, const TspSubroutine& sub_order,
                  const TspSubroutine& sub_glue, bool require_metric = true);

}  // namespace pctsp

#endif
