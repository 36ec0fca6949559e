#include "pctsp/instance.hpp"

#include <cmath>
#include <stdexcept>

namespace pctsp {

double Instance::distance(int i, int j) const {
  const int n = size();
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw std::invalid_argument("vertex index out of range");
  }
  if (kind == InstanceKind::matrix) {
    return weights[static_cast<size_t>(i) * n + j];
  }
  double s = 0.0;
  const auto& p = points[i];
  const auto& q = points[j];
  for (size_t d = 0; d < p.size(); ++d) {
    const double diff = p[d] - q[d];
    s += diff * diff;
  }
  return std::sqrt(s);
}

std::vector<std::vector<int>> Instance::classes() const {
  std::vector<std::vector<int>> cls(k);
  for (int v = 0; v < size(); ++v) {
    cls[colors[v]].push_back(v);
  }
  return cls;
}

void Instance::validate() const {
  const int n = size();
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (n < k) throw std::invalid_argument("n must be at least k");
  if (n % k != 0) throw std::invalid_argument("k must divide n");
  std::vector<int> count(k, 0);
  for (int c : colors) {
    if (c < 0 || c >= k) throw std::invalid_argument("color index out of range");
    ++count[c];
  }
  for (int c = 0; c < k; ++c) {
    if (count[c] != n / k) {
      throw std::invalid_argument("color classes must have equal size n/k");
    }
  }
  if (kind == InstanceKind::euclidean) {
    if (static_cast<int>(points.size()) != n) {
      throw std::invalid_argument("points size must match colors size");
    }
    if (n > 0 && points[0].empty()) {
      throw std::invalid_argument("point dimension must be at least 1");
    }
    for (const auto& p : points) {
      if (p.size() != points[0].size()) {
        throw std::invalid_argument("all points must have the same dimension");
      }
    }
  } else {
    if (weights.size() != static_cast<size_t>(n) * n) {
      throw std::invalid_argument("weight matrix must be n x n");
    }
    for (int i = 0; i < n; ++i) {
      if (weights[static_cast<size_t>(i) * n + i] != 0.0) {
        throw std::invalid_argument("weight matrix diagonal must be zero");
      }
      for (int j = 0; j < n; ++j) {
        const double w = weights[static_cast<size_t>(i) * n + j];
        if (w < 0.0) throw std::invalid_argument("weights must be nonnegative");
        if (w != weights[static_cast<size_t>(j) * n + i]) {
          throw std::invalid_argument("weight matrix must be symmetric");
        }
      }
    }
  }
}

double tour_cost(const Instance& inst, const Tour& tour) {
  const int n = static_cast<int>(tour.order.size());
  double c = 0.0;
  for (int i = 0; i < n; ++i) {
    c += inst.distance(tour.order[i], tour.order[(i + 1) % n]);
  }
  return c;
}

bool is_permutation_of_n(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

MetricReport check_metric(const Instance& inst, double tol) {
  MetricReport report;
  if (inst.kind == InstanceKind::euclidean) return report;
  const int n = inst.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double wij = inst.weights[static_cast<size_t>(i) * n + j];
      for (int l = 0; l < n; ++l) {
        const double slack =
            wij - inst.weights[static_cast<size_t>(i) * n + l] -
            inst.weights[static_cast<size_t>(l) * n + j];
        if (slack > report.worst_violation) report.worst_violation = slack;
      }
    }
  }
  report.is_metric = report.worst_violation <= tol;
  return report;
}

SigmaCheck verify_sigma_tour(const Instance& inst, const Tour& tour) {
  SigmaCheck result;
  const int n = inst.size();
  const int k = inst.k;
  if (!is_permutation_of_n(tour.order, n)) {
    result.reason = "tour is not a permutation of the vertex set";
    return result;
  }
  // sigma is read off the first k visited colors.
  std::vector<int> sigma(k);
  std::vector<char> seen(k, 0);
  for (int i = 0; i < k; ++i) {
    const int c = inst.colors[tour.order[i]];
    if (seen[c]) {
      result.reason = "color " + std::to_string(c) +
                      " repeats within the first k positions";
      return result;
    }
    seen[c] = 1;
    sigma[i] = c;
  }
  for (int i = k; i < n; ++i) {
    if (inst.colors[tour.order[i]] != sigma[i % k]) {
      result.reason = "position " + std::to_string(i) + " has color " +
                      std::to_string(inst.colors[tour.order[i]]) +
                      ", expected " + std::to_string(sigma[i % k]);
      return result;
    }
  }
  result.ok = true;
  result.sigma = ClassOrder{std::move(sigma)};
  return result;
}

}  // namespace pctsp
