#include "iongas/rarefaction.hpp"

#include <algorithm>
#include <cmath>

#include "iongas/characteristics.hpp"
#include "iongas/numerics.hpp"

namespace iongas {

namespace {

// denominator d(alpha) of the closed-form isentrope; strictly decreasing
double isentrope_denominator(double alpha, double eta0) {
  return 2.0 * (std::log1p(-alpha) - std::log(alpha)) - 2.5 * (1.0 + alpha) +
         eta0;
}

}  // namespace

double alpha_infinity(const GasModel& g, double eta0) {
  (void)g;  // independent of the gas constants
  auto d = [&](double a) { return isentrope_denominator(a, eta0); };
  const double lo = 1e-300;
  const double hi = std::nextafter(1.0, 0.0);
  if (!(d(lo) > 0.0 && d(hi) < 0.0))
    throw std::domain_error("alpha_infinity: eta0 outside resolvable range");
  return find_root(d, {lo, hi}, 1e-15, 300);
}

double isentrope_T(const GasModel& g, double alpha, double eta0) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("isentrope_T: alpha outside (0,1)");
  const double d = isentrope_denominator(alpha, eta0);
  if (!(d > 0.0))
    throw std::domain_error(
        "isentrope_T: alpha beyond the blow-up degree (negative temperature)");
  return (1.0 + alpha) * g.Ti / d;
}

double isentrope_curvature(const GasModel& g, double alpha, double eta0) {
  const double T = isentrope_T(g, alpha, eta0);
  const double Ti = g.Ti;
  const double om = 1.0 - alpha;
  const double eta_a = 2.0 / (alpha * om) + q_of(g, T);
  const double eta_T = -Ti / (T * T) * (1.0 + alpha);
  const double eta_aa = 2.0 * (2.0 * alpha - 1.0) / (alpha * alpha * om * om);
  const double eta_aT = -Ti / (T * T);
  const double eta_TT = 2.0 * Ti * (1.0 + alpha) / (T * T * T);
  const double num =
      eta_aa * eta_T * eta_T - 2.0 * eta_aT * eta_a * eta_T +
      eta_TT * eta_a * eta_a;
  return -num / (eta_T * eta_T * eta_T);
}

double du_dalpha(const GasModel& g, double alpha, double T) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(T > 0.0))
    throw std::domain_error("du_dalpha: invalid state");
  const double tau = tau_of(g, T);
  const double A = coef_A(alpha, tau);
  const double B = coef_B(alpha, tau);
  const double p_over_lambda =
      std::sqrt(g.a2) * std::sqrt(T * (1.0 + alpha)) * std::sqrt(B / A);
  return A / (phi_of(alpha) * (1.0 + alpha) * tau) * p_over_lambda;
}

namespace {

// cumulative u over a ln-alpha grid; sign -1 for u_plus, +1 for u_minus
std::vector<double> integrate_u_on_grid(const GasModel& g, double eta0,
                                        const std::vector<double>& ln_grid,
                                        double u_anchor, int anchor_idx,
                                        double sign, double rel_tol) {
  OdeRhs rhs = [&](double x, const Eigen::VectorXd&) {
    const double a = std::exp(x);
    return (Eigen::VectorXd(1)
                << sign * a * du_dalpha(g, a, isentrope_T(g, a, eta0)))
        .finished();
  };
  const int n = int(ln_grid.size());
  std::vector<double> u(n);
  u[anchor_idx] = u_anchor;
  const double u_scale = std::max(std::abs(u_anchor), std::sqrt(g.a2 * g.Ti));
  Eigen::VectorXd y(1);
  for (int i = anchor_idx + 1; i < n; ++i) {
    y[0] = u[i - 1];
    u[i] = integrate_ode(rhs, y, ln_grid[i - 1], ln_grid[i], rel_tol,
                         rel_tol * u_scale)
               .y_end()[0];
  }
  for (int i = anchor_idx - 1; i >= 0; --i) {
    y[0] = u[i + 1];
    u[i] = integrate_ode(rhs, y, ln_grid[i + 1], ln_grid[i], rel_tol,
                         rel_tol * u_scale)
               .y_end()[0];
  }
  return u;
}

}  // namespace

RarefactionSegment integrate_rarefaction(const GasModel& g,
                                         const RefState& ref,
                                         WaveFamily family,
                                         double alpha_target, int n,
                                         double rel_tol) {
  RarefactionSegment seg;
  seg.family = family;
  seg.eta0 = ref.eta0;
  seg.alpha_inf = alpha_infinity(g, ref.eta0);
  if (n < 2) throw std::domain_error("integrate_rarefaction: n < 2");
  if (!(alpha_target > 0.0 && alpha_target < 1.0))
    throw std::domain_error("integrate_rarefaction: target outside (0,1)");
  if (family == WaveFamily::minus && alpha_target > ref.alpha0)
    throw std::domain_error(
        "integrate_rarefaction: the minus family runs over (0, alpha0]");
  if (family == WaveFamily::plus &&
      (alpha_target < ref.alpha0 || alpha_target >= seg.alpha_inf ||
       seg.alpha_inf - alpha_target < 1e-12))
    throw std::domain_error(
        "integrate_rarefaction: the plus family runs over [alpha0, alpha_inf)");

  std::vector<double> grid(n);
  const double x0 = ref.rep0.ln_a, x1 = std::log(alpha_target);
  for (int i = 0; i < n; ++i) grid[i] = x0 + (x1 - x0) * i / (n - 1);
  const bool ascending = x1 >= x0;
  if (!ascending) std::reverse(grid.begin(), grid.end());
  const int anchor = ascending ? 0 : n - 1;

  const double sign = (family == WaveFamily::plus) ? -1.0 : 1.0;
  std::vector<double> u =
      integrate_u_on_grid(g, ref.eta0, grid, ref.u0, anchor, sign, rel_tol);

  seg.samples.resize(n);
  for (int i = 0; i < n; ++i) {
    const int j = ascending ? i : n - 1 - i;  // emit from alpha0 outward
    const double a = std::exp(grid[j]);
    RarefactionSample& smp = seg.samples[i];
    smp.alpha = a;
    smp.T = isentrope_T(g, a, ref.eta0);
    smp.p = std::exp(ln_pressure(g, AlphaRep::from_ln_alpha(grid[j]), smp.T));
    smp.u = u[j];
    const double lam = lagrangian_sound_speed_alphaT(g, a, smp.T, smp.p);
    smp.lambda = (family == WaveFamily::plus) ? lam : -lam;
    smp.eta_drift = entropy_alphaT(g, a, smp.T) - ref.eta0;
    smp.gn_certified = is_gn_sufficient(g, a, smp.T);
  }
  return seg;
}

Isentrope sample_isentrope(const GasModel& g, const RefState& ref,
                           double alpha_lo, double alpha_hi, int n,
                           double rel_tol) {
  Isentrope iso;
  iso.eta0 = ref.eta0;
  iso.alpha_inf = alpha_infinity(g, ref.eta0);
  if (n < 2) throw std::domain_error("sample_isentrope: n < 2");
  if (!(alpha_lo > 0.0 && alpha_lo < alpha_hi && alpha_hi < iso.alpha_inf))
    throw std::domain_error(
        "sample_isentrope: range must satisfy 0 < lo < hi < alpha_inf");

  std::vector<double> grid(n);
  const double x_lo = std::log(alpha_lo), x_hi = std::log(alpha_hi);
  for (int i = 0; i < n; ++i) grid[i] = x_lo + (x_hi - x_lo) * i / (n - 1);
  // anchor at the grid point nearest alpha0 (clamped into the range)
  const double x0 = std::clamp(ref.rep0.ln_a, x_lo, x_hi);
  int anchor = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(grid[i] - x0) < std::abs(grid[anchor] - x0)) anchor = i;
  grid[anchor] = x0;

  std::vector<double> up =
      integrate_u_on_grid(g, ref.eta0, grid, ref.u0, anchor, -1.0, rel_tol);
  std::vector<double> um =
      integrate_u_on_grid(g, ref.eta0, grid, ref.u0, anchor, +1.0, rel_tol);

  iso.samples.resize(n);
  for (int i = 0; i < n; ++i) {
    const double a = std::exp(grid[i]);
    IsentropeSample& smp = iso.samples[i];
    smp.alpha = a;
    smp.T = isentrope_T(g, a, ref.eta0);
    smp.p = std::exp(ln_pressure(g, AlphaRep::from_ln_alpha(grid[i]), smp.T));
    smp.u_plus = up[i];
    smp.u_minus = um[i];
    smp.eta_drift = entropy_alphaT(g, a, smp.T) - ref.eta0;
  }
  return iso;
}

}  // namespace iongas
