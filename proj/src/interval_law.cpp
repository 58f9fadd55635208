#include "roughcomb/interval_law.hpp"

#include <cmath>
#include <stdexcept>

namespace roughcomb {

namespace {

double cube(double x) { return x * x * x; }

void check_support(double a1, double a2) {
  if (!(a1 >= -1.0) || !(a1 < 0.0) || !(a2 > 0.0) || !(a2 <= 1.0))
    throw std::invalid_argument("support pair must satisfy -1 <= a1 < 0 < a2 <= 1");
}

}  // namespace

double density_p(double a1, double a2) {
  return (a2 - a1) * (4.0 / (3.0 * cube(1.0 + a2)) + 4.0 / (3.0 * cube(1.0 - a1)) + 1.0 / 6.0);
}

double marginal_right(double a2) {
  double s = 1.0 + a2;
  return 4.0 / (3.0 * s * s) - 2.0 / (3.0 * cube(s)) + 2.0 * a2 / 3.0 + 0.25;
}

std::array<double, 2> load_fractions(double a1, double a2) {
  check_support(a1, a2);
  double span = a2 - a1;
  return {a2 / span, -a1 / span};
}

double scratch_rate_left(double a1, QuadratureSpec spec) {
  if (!(a1 >= -1.0) || !(a1 < 0.0))
    throw std::invalid_argument("scratch_rate_left: a1 must lie in [-1, 0)");
  return integrate_1d([a1](double a2) { return a2 / (a2 - a1) * density_p(a1, a2); }, 0.0, 1.0,
                      spec);
}

double scratch_rate_right(double a2, QuadratureSpec spec) {
  if (!(a2 > 0.0) || !(a2 <= 1.0))
    throw std::invalid_argument("scratch_rate_right: a2 must lie in (0, 1]");
  return integrate_1d([a2](double a1) { return -a1 / (a2 - a1) * density_p(a1, a2); }, -1.0, 0.0,
                      spec);
}

double scratch_rate_left_alt_form(double a1) { return 2.0 / (3.0 * cube(1.0 - a1)) + 0.5; }

double scratch_rate_right_alt_form(double a2) { return 2.0 / (3.0 * cube(1.0 + a2)) + 0.5; }

double p_star_beam(double mu) {
  if (!(mu >= 0.0) || !(mu <= 1.0))
    throw std::invalid_argument("p_star_beam: mu must lie in [0, 1]");
  double r = 2.0 * mu / (1.0 + mu);
  return (1.0 - mu) * (1.0 - mu) / 6.0 * (6.0 + mu - r * r);
}

std::array<double, 3> q_decomposition(double a1, double a2) {
  double span = a2 - a1;
  double q1 = span / 2.0;
  double q_right = 4.0 * span / 3.0 * (1.0 / cube(1.0 + a2) - 0.125);
  double q_left = 4.0 * span / 3.0 * (1.0 / cube(1.0 - a1) - 0.125);
  return {q1, q_right, q_left};
}

LinePlacement::LinePlacement(double A1_, double A2_, SupportPoint2 a_) : A1(A1_), A2(A2_), a(a_) {
  if (!(A1 >= 0.0) || !(A2 >= 0.0))
    throw std::invalid_argument("LinePlacement: tip gaps must be nonnegative");
  check_support(a.a1, a.a2);
  double mix = A1 * a.a2 - A2 * a.a1;
  if (A1 != A2 && std::abs(A1 - A2) >= mix) x_star = mix / (A1 - A2);
}

double prob_comb_below_line(const LinePlacement& placement) {
  double A1 = placement.A1, A2 = placement.A2;
  double a1 = placement.a.a1, a2 = placement.a.a2;
  if (A1 == 0.0 && A2 == 0.0) return 1.0;
  double span = a2 - a1;
  double mix = A1 * a2 - A2 * a1;
  if (std::abs(A1 - A2) < mix) return std::exp(-mix / span);
  if (A1 > A2) {
    double num = A1 * (a2 + 1.0) - A2 * (a1 + 1.0);
    return std::exp(-num * num / (4.0 * span * (A1 - A2)));
  }
  double num = A2 * (1.0 - a1) - A1 * (1.0 - a2);
  return std::exp(-num * num / (4.0 * span * (A2 - A1)));
}

}  // namespace roughcomb
