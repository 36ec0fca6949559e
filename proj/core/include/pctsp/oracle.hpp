#ifndef PCTSP_ORACLE_HPP
#define PCTSP_ORACLE_HPP

#include <cstdint>

#include "pctsp/instance.hpp"

namespace pctsp {

struct OracleResult {
  Tour tour;
  ClassOrder sigma;
  double cost = 0.0;
  std::int64_t explored = 0;  // (sigma, partial tour) nodes visited
  bool optimal = true;        // false when the node budget ran out
};

/// Brute-force optimum over all Hamiltonian sigma-cycles and all sigma.
/// sigma(0) is fixed to the color of vertex 0 (rotation symmetry); both
/// traversal directions are searched. Depth-first with incumbent pruning.
/// Intended for n <= 12, k <= 6. budget < 0 means unlimited.
OracleResult solve_exact(const Instance& inst, std::int64_t budget = -1);

}  // namespace pctsp

#endif
