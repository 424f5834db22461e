#include "iongas/characteristics.hpp"

#include <algorithm>
#include <cmath>

#include "iongas/numerics.hpp"

namespace iongas {

double lagrangian_sound_speed_alphaT(const GasModel& g, double alpha, double T,
                                     double p) {
  const double tau = tau_of(g, T);
  return p * std::sqrt(coef_A(alpha, tau) /
                       (g.a2 * T * (1.0 + alpha) * coef_B(alpha, tau)));
}

double lagrangian_sound_speed(const GasModel& g, double p, double T) {
  return lagrangian_sound_speed_alphaT(g, alpha_from_pT(g, p, T), T, p);
}

Eigen::Matrix3d system_matrix_pT(const GasModel& g, double p, double T) {
  const PartialsBundle d = partials(g, p, T);
  const double lam = lagrangian_sound_speed(g, p, T);
  Eigen::Matrix3d m;
  m << 0.0, lam * lam, 0.0,
       1.0, 0.0, 0.0,
       0.0, -(d.eta_p / d.eta_T) * lam * lam, 0.0;
  return m;
}

Eigen::Matrix3d jacobian_pT_from_alphaT(const GasModel& g, double alpha,
                                        double T) {
  // p = (1-alpha^2)/(kappa alpha^2) T^{5/2} e^{-Ti/T}
  const double p = pressure_from_alphaT(g, alpha, T);
  const double q = q_of(g, T);
  Eigen::Matrix3d j;
  j << -2.0 * p / (alpha * (1.0 - alpha * alpha)), 0.0, p * q / T,
       0.0, 1.0, 0.0,
       0.0, 0.0, 1.0;
  return j;
}

EigenDecomposition eigen(const GasModel& g, const ThermoState& s,
                         Coords coords) {
  EigenDecomposition out;
  out.coords = coords;
  out.lambda_plus = s.lambda;
  out.lambda_minus = -s.lambda;
  out.lambda_zero = 0.0;
  const double tau = tau_of(g, s.T);
  const double q = 2.5 + tau;
  const double phi = phi_of(s.alpha);
  const double A = coef_A(s.alpha, tau);
  if (coords == Coords::pT) {
    const double ratio = s.T * (1.0 + phi * q) / (s.p * A);  // -eta_p/eta_T
    out.r_plus << 1.0, 1.0 / s.lambda, -ratio;
    out.r_minus << -1.0, 1.0 / s.lambda, ratio;
    out.r_zero << 0.0, 0.0, 1.0;
  } else {
    const double a1 = phi * (1.0 + s.alpha) * tau / A;
    const double a3 = (1.0 + phi * q) / A * s.T;
    out.r_plus << a1, s.p / s.lambda, a3;
    out.r_minus << -a1, s.p / s.lambda, -a3;
    out.r_zero << phi * (1.0 + s.alpha) * q, 0.0, s.T;
  }
  return out;
}

double inflection_f(const GasModel& g, double alpha, double T) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("inflection_f: alpha outside (0,1)");
  if (!(T > 0.0)) throw std::domain_error("inflection_f: T <= 0");
  const double tau = tau_of(g, T);
  const double u = alpha * (1.0 - alpha);
  const double q = 2.5 + tau;
  const double d1 = 1.0 + u * (1.25 + tau + tau * tau / 5.0);
  const double d2 = 1.0 + u * (1.25 + tau + tau * tau / 3.0);
  const double corr =
      u * tau * tau / 15.0 * std::pow(1.0 + 0.5 * u * q, 2) -
      alpha * (1.0 - alpha * alpha) * (1.0 - 2.0 * alpha) * tau * tau * tau /
          60.0;
  return 1.0 + u * (1.25 + tau + tau * tau / 4.0) + corr / (d1 * d2);
}

double gn_log_rate_plus(const GasModel& g, double alpha, double T) {
  const double p = pressure_from_alphaT(g, alpha, T);
  return 2.0 * inflection_f(g, alpha, T) / (p * coef_A(alpha, tau_of(g, T)));
}

bool is_gn_sufficient(const GasModel& g, double alpha, double T) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(T > 0.0))
    throw std::domain_error("is_gn_sufficient: invalid state");
  const double r = T / g.Ti;
  return alpha <= 60.0 * r * r * r || tau_of(g, T) <= 54.5375;
}

InflectionLocus trace_inflection_locus(const GasModel& g, double T_lo,
                                       double T_hi, int n,
                                       double ln_alpha_floor, int seeds) {
  if (!(T_lo > 0.0 && T_hi > T_lo) || n < 1 || seeds < 2)
    throw std::domain_error("trace_inflection_locus: bad range");
  InflectionLocus locus;
  locus.left.branch = InflectionCurve::Branch::left;
  locus.right.branch = InflectionCurve::Branch::right;
  const double x_hi = std::log(0.5);

  for (int i = 0; i < n; ++i) {
    const double T =
        (n == 1) ? T_lo
                 : std::exp(std::log(T_lo) +
                            (std::log(T_hi) - std::log(T_lo)) * i / (n - 1));
    auto fx = [&](double x) { return inflection_f(g, std::exp(x), T); };
    double prev_x = ln_alpha_floor;
    double prev_f = fx(prev_x);
    std::vector<double> roots;
    for (int k = 1; k < seeds; ++k) {
      const double x = ln_alpha_floor + (x_hi - ln_alpha_floor) * k / (seeds - 1);
      const double f = fx(x);
      if ((prev_f > 0.0) != (f > 0.0))
        roots.push_back(find_root(fx, {prev_x, x}, 1e-15, 200));
      prev_x = x;
      prev_f = f;
    }
    if (roots.empty()) continue;
    // geometric mean of the two asymptotic predictions splits the branches
    const double r = T / g.Ti;
    const double split = std::log(std::sqrt(60.0 * r * r * r) *
                                  std::pow(r, 0.75));
    for (double x : roots) {
      InflectionCurve& c = (x < split) ? locus.left : locus.right;
      c.alpha.push_back(std::exp(x));
      c.T.push_back(T);
      c.f_residual.push_back(std::abs(fx(x)));
    }
  }
  return locus;
}

}  // namespace iongas
