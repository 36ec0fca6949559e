#ifndef PCTSP_HARDNESS_HPP
#define PCTSP_HARDNESS_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pctsp/instance.hpp"

namespace pctsp {

/// Max 2-SAT instance. Literals are signed 1-based variable indices;
/// each clause must reference two distinct variables.
struct TwoSatInstance {
  int n_vars = 0;
  std::vector<std::pair<int, int>> clauses;  // normalized |first| < |second|

  void validate() const;  // throws std::invalid_argument
};

/// Text format: header "p 2sat <n> <m>", then m lines of two nonzero
/// signed integers. '#' or 'c' lines are comments.
TwoSatInstance parse_two_sat(std::istream& in);
TwoSatInstance parse_two_sat_file(const std::string& path);

/// Geometry constants of the reduction. a and b are free (subject to
/// a > 14, b > 30a); l and W derive from them and the clause count.
struct ReductionParams {
  double a = 15.0;
  double b = 3000.0;

  double strip_width(int m) const { return 27.0 * m * a + (m - 1) * b; }  // W
  double strip_unit(int m) const { return strip_width(m) / (4.0 * m); }   // l

  /// Throws std::domain_error naming the first failed inequality among
  /// a > 14, b > 30a, l >= 30a (the last needs m >= 2).
  void validate(int m) const;
};

// Color class layout: k = 3n + 1 classes, R_alpha / T_alpha / F_alpha for
// alpha in [1, n] plus R_{n+1}.
int color_R(int alpha);  // 3*(alpha-1)
int color_T(int alpha);
int color_F(int alpha);
std::string color_name(int color, int n_vars);

/// One emitted point. Gadget points carry their clause index and location
/// id p1..p11 (locations p4/p6 and p5/p7 coincide); strip points use
/// gadget = -1, location = 0.
struct Placement {
  std::array<double, 2> pos{};
  int color = -1;
  int gadget = -1;
  int location = 0;
};

/// Points of one clause gadget anchored at x. Every color appears exactly
/// twice, giving 2*(3n+1) points at 9 distinct locations. The color that
/// satisfies each tested literal sits on the line y = -1.
std::vector<Placement> build_gadget(std::pair<int, int> clause, int n_vars,
                                    double anchor_x,
                                    const ReductionParams& params);

struct ReductionLayout {
  ReductionParams params;
  TwoSatInstance sat;
  Instance instance;
  std::vector<Placement> placements;   // aligned with instance vertices
  std::vector<double> gadget_anchors;  // per clause
  std::vector<int> strip_point;        // vertex index per color

  int n_vars() const { return sat.n_vars; }
  int n_clauses() const { return static_cast<int>(sat.clauses.size()); }

  /// Gadget point indices at (gadget, location), unordered.
  std::vector<int> gadget_points(int gadget, int location) const;
};

/// Full reduction point set S (strip) followed by the m clause gadgets,
/// gadget i anchored at (i-1)(27a + b), strip on y = -(2W + 1).
ReductionLayout build_layout(const TwoSatInstance& sat,
                             const ReductionParams& params);

/// The valid class order encoding an assignment:
/// (R_1, P_1, Q_1, ..., R_n, P_n, Q_n, R_{n+1}) with (P,Q) = (T,F) when
/// the variable is true, else (F,T).
ClassOrder sigma_from_assignment(const std::vector<bool>& assign, int n_vars);

/// Both validity conditions under the linear order read from position 0:
/// R_a precedes T_a and F_a, and T_a, F_a precede every later R_b.
bool is_valid_sigma(const ClassOrder& sigma, int n_vars);

/// Clauses with at least one literal satisfied by the assignment encoded
/// in sigma. Throws std::invalid_argument on an invalid sigma.
int satisfied_clauses(const ClassOrder& sigma, const TwoSatInstance& sat);

/// Path constant c(a) = 5 + sqrt(a^2+4) + sqrt(a^2+1) + sqrt(49a^2+1)
/// + sqrt(324a^2+1).
double gadget_path_constant(double a);

/// Candidate gadget path lengths: c + 2a when the tested literal pair is
/// not both-unsatisfied, c + 2*sqrt(a^2+4) otherwise.
double gadget_path_length(double a, bool sat_first, bool sat_second);

/// Closed-form tour length f(k_sat) = 5W + (m-1)b + k_sat(c+2a)
/// + (m-k_sat)(c + 2*sqrt(a^2+4)).
double constructive_tour_length(const ReductionParams& params, int m,
                                int k_sat);

/// Point sequence of one candidate gadget path for the given assignment,
/// restricted to the placements of gadget `gadget`. Coincident points are
/// visited in sigma order.
std::vector<int> gadget_path(const ReductionLayout& layout, int gadget,
                             const std::vector<bool>& assign);

/// The explicit sigma-tour: straight strip path, 2W jump to gadget 1,
/// gadgets in ascending order via their candidate paths, 2W return.
/// Verified against verify_sigma_tour before returning; a mismatch throws
/// std::logic_error.
Tour constructive_tour(const ReductionLayout& layout,
                       const std::vector<bool>& assign);

/// eps' = eps * c_a / (2*c_ab - c_a) with c_a = 2(sqrt(a^2+4) - a) and
/// c_ab = 135a + 6b + c(a). Note the linear form c_ab*m - 6b - c_a*k
/// differs from constructive_tour_length by a per-clause sqrt(a^2+4)
/// term; the closed form is kept exactly as stated.
double epsilon_prime(double eps, const ReductionParams& params);

}  // namespace pctsp

#endif
