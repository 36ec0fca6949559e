#ifndef PCTSP_INSTANCE_HPP
#define PCTSP_INSTANCE_HPP

#include <optional>
#include <string>
#include <vector>

namespace pctsp {

enum class InstanceKind { euclidean, matrix };

/// A polychromatic instance: n vertices partitioned into k equal-size
/// color classes, with distances given either by point coordinates or by
/// an explicit symmetric weight matrix.
struct Instance {
  InstanceKind kind = InstanceKind::euclidean;
  std::vector<std::vector<double>> points;  // euclidean kind, d >= 1 coords each
  std::vector<double> weights;              // matrix kind, n*n row-major
  std::vector<int> colors;                  // class index per vertex, in [0, k)
  int k = 0;

  int size() const { return static_cast<int>(colors.size()); }
  int class_size() const { return size() / k; }

  double distance(int i, int j) const;

  /// Vertices of each class, ascending index.
  std::vector<std::vector<int>> classes() const;

  /// Throws std::invalid_argument if any structural invariant fails.
  void validate() const;
};

/// Cyclic vertex sequence; cost is derived, not stored.
struct Tour {
  std::vector<int> order;
};

double tour_cost(const Instance& inst, const Tour& tour);

/// Is `order` a permutation of [0, n)?
bool is_permutation_of_n(const std::vector<int>& order, int n);

/// Cyclic permutation of the k color classes.
struct ClassOrder {
  std::vector<int> sigma;
};

struct MetricReport {
  bool is_metric = true;
  double worst_violation = 0.0;  // max over triples of w(i,j) - w(i,l) - w(l,j)
};

/// Checks all n^3 triangle inequalities within tol. Euclidean instances
/// are metric by construction and short-circuit to a clean report.
MetricReport check_metric(const Instance& inst, double tol = 1e-9);

struct SigmaCheck {
  bool ok = false;
  std::optional<ClassOrder> sigma;
  std::string reason;
};

/// Verdict on whether `tour` is a Hamiltonian sigma-cycle for some sigma.
/// On success the returned sigma is canonical: it starts at the color of
/// tour vertex 0. Reflections are not identified.
SigmaCheck verify_sigma_tour(const Instance& inst, const Tour& tour);

}  // namespace pctsp

#endif
