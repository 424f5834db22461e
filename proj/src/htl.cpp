#include "iongas/htl.hpp"

#include <algorithm>
#include <cmath>

#include "iongas/numerics.hpp"

namespace iongas::htl {

namespace {

void require_state(double alpha, double T) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("htl: alpha outside (0,1)");
  if (!(T > 0.0)) throw std::domain_error("htl: T <= 0");
}

}  // namespace

double alpha_from_pT(const GasModel& g, double p, double T) {
  if (!(p > 0.0 && T > 0.0)) throw std::domain_error("htl: non-positive input");
  const double beta = g.kappa * p * std::pow(T, -2.5);
  return 1.0 / std::sqrt(1.0 + beta);
}

double pressure(const GasModel& g, double alpha, double T) {
  require_state(alpha, T);
  return (1.0 - alpha * alpha) / (g.kappa * alpha * alpha) * std::pow(T, 2.5);
}

double specific_volume(const GasModel& g, double alpha, double T) {
  require_state(alpha, T);
  return g.a2 * g.kappa * alpha * alpha / (1.0 - alpha) * std::pow(T, -1.5);
}

double entropy(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("htl: alpha outside (0,1)");
  return -2.0 * (std::log1p(-alpha) - std::log(alpha)) + 2.5 * alpha;
}

double pseudo_entropy(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("htl: alpha outside (0,1)");
  return 0.4 * std::log(alpha) + 0.3 * std::log1p(alpha) -
         0.2 * std::log1p(-alpha);
}

HtlState state_from_alphaT(const GasModel& g, double alpha, double T) {
  require_state(alpha, T);
  HtlState s;
  s.alpha = alpha;
  s.T = T;
  s.p = pressure(g, alpha, T);
  s.v = specific_volume(g, alpha, T);
  s.e = 1.5 * g.a2 * (1.0 + alpha) * T;
  s.H = 2.5 * g.a2 * (1.0 + alpha) * T;
  s.eta = entropy(alpha);
  s.pseudo_entropy = pseudo_entropy(alpha);
  s.lambda = s.p / std::sqrt(g.a2) * std::sqrt(5.0 / (3.0 * T * (1.0 + alpha)));
  return s;
}

HtlState state_from_pT(const GasModel& g, double p, double T) {
  return htl::state_from_alphaT(g, htl::alpha_from_pT(g, p, T), T);
}

EigenFields eigen(const GasModel& g, const HtlState& s) {
  EigenFields f;
  f.lambda_plus = s.lambda;
  f.lambda_minus = -s.lambda;
  const double a = std::sqrt(g.a2);
  f.r_plus << 0.0, -a * std::sqrt(3.0 * s.T * (1.0 + s.alpha) / 5.0),
      0.4 * s.T;
  f.r_minus << 0.0, a * std::sqrt(3.0 * s.T * (1.0 + s.alpha) / 5.0),
      0.4 * s.T;
  f.r_zero << 1.25 * s.alpha * (1.0 - s.alpha * s.alpha), 0.0, s.T;
  // assemble R+ grad(log lambda) from the (p,T) gradients; collapses to
  // 4/(5p) because alpha is invariant along the acoustic directions
  const double phi = phi_of(s.alpha);
  const double dlog_dp = (1.0 + 0.5 * phi) / s.p;
  const double dlog_dT = -(1.0 + 2.5 * phi) / (2.0 * s.T);
  const double ratio =
      s.T * (1.0 + 2.5 * phi) / (s.p * (2.5 + 6.25 * phi));  // -eta_p/eta_T
  f.gn_log_rate_plus = dlog_dp + ratio * dlog_dT;
  return f;
}

double integral_curve_u(const GasModel& g, double p0, double u0, double alpha0,
                        double p, bool plus_family) {
  if (!(p > 0.0 && p0 > 0.0)) throw std::domain_error("htl: non-positive p");
  const double a = std::sqrt(g.a2);
  const double coef = std::sqrt(15.0 * (1.0 + alpha0)) * a *
                      std::pow(g.kappa * alpha0 * alpha0 /
                                   (1.0 - alpha0 * alpha0),
                               0.2);
  const double delta = std::pow(p, 0.2) - std::pow(p0, 0.2);
  return u0 + (plus_family ? -1.0 : 1.0) * coef * delta;
}

RefState make_ref_state(const GasModel& g, double alpha0, double T0,
                        double u0) {
  require_state(alpha0, T0);
  RefState r;
  r.alpha0 = alpha0;
  r.T0 = T0;
  r.u0 = u0;
  r.p0 = pressure(g, alpha0, T0);
  r.v0 = specific_volume(g, alpha0, T0);
  r.eta0 = entropy(alpha0);
  r.scale_F = 4.0 * T0 * (1.0 + alpha0);
  return r;
}

double thermo_residual(const GasModel& g, double alpha, double T,
                       const RefState& ref) {
  require_state(alpha, T);
  const double la = std::log(alpha), l1 = std::log1p(-alpha);
  const double la0 = std::log(ref.alpha0), l10 = std::log1p(-ref.alpha0);
  const double dlT = std::log(T) - std::log(ref.T0);
  // p/p0 and v/v0 as exponentials of log differences
  const double pr = std::exp(l1 + std::log1p(alpha) - 2.0 * la -
                             (l10 + std::log1p(ref.alpha0) - 2.0 * la0) +
                             2.5 * dlT);
  const double vr =
      std::exp(2.0 * (la - la0) - (l1 - l10) - 1.5 * dlT);
  (void)g;
  return 4.0 * (T * (1.0 + alpha) - ref.T0 * (1.0 + ref.alpha0)) +
         ref.T0 * (1.0 + ref.alpha0) * (vr - pr);
}

double locus_alpha_at_T(const GasModel& g, const RefState& ref, double T) {
  // residual is strictly increasing in alpha: -inf at 0+, +inf at 1-
  auto R_lower = [&](double x) {
    return thermo_residual(g, std::exp(x), T, ref);
  };
  const double x_mid = std::log(0.5);
  const double r_mid = R_lower(x_mid);
  if (r_mid == 0.0) return 0.5;
  if (r_mid > 0.0) {
    double lo = x_mid, h = 0.5;
    for (int k = 0; R_lower(lo) > 0.0; ++k) {
      if (k >= 300) throw NumericalError("htl locus: no lower bracket");
      lo -= h;
      h *= 1.6;
    }
    return std::exp(
        find_root(R_lower, {lo, std::min(lo + 2.0 * h, x_mid)}, 1e-15, 300));
  }
  auto R_upper = [&](double s) {
    return thermo_residual(g, -std::expm1(s), T, ref);
  };
  double lo = x_mid, h = 0.5;  // s = ln(1-alpha), residual decreasing in s
  for (int k = 0; R_upper(lo) < 0.0; ++k) {
    if (k >= 300) throw NumericalError("htl locus: no upper bracket");
    lo -= h;
    h *= 1.6;
  }
  return -std::expm1(
      find_root(R_upper, {lo, std::min(lo + 2.0 * h, x_mid)}, 1e-15, 300));
}

HugoniotCurve trace_thermo_locus(const GasModel& g, const RefState& ref,
                                 double T_lo, double T_hi, int n) {
  if (!(T_lo > 0.0 && T_lo < T_hi) || n < 2)
    throw std::domain_error("htl trace: bad T range");
  HugoniotCurve curve;
  curve.ref = ref;
  curve.samples.resize(n);
  for (int i = 0; i < n; ++i) {
    const double T = std::exp(std::log(T_lo) +
                              (std::log(T_hi) - std::log(T_lo)) * i / (n - 1));
    const double alpha = locus_alpha_at_T(g, ref, T);
    LocusSample& s = curve.samples[i];
    s.alpha = alpha;
    s.T = T;
    s.p = pressure(g, alpha, T);
    s.v = specific_volume(g, alpha, T);
    s.residual = thermo_residual(g, alpha, T, ref);
    if (std::abs(s.residual) > 1e-9 * ref.scale_F)
      throw NumericalError("htl trace: corrector residual beyond tolerance");
  }
  return curve;
}

double kinetic_usq(const GasModel& g, const RefState& ref, double p) {
  if (!(p > 0.0)) throw std::domain_error("htl kinetic: p <= 0");
  const double dp = p - ref.p0;
  return 3.0 * g.a2 * ref.T0 * (1.0 + ref.alpha0) * dp * dp /
         (ref.p0 * (4.0 * p + ref.p0));
}

std::pair<std::optional<double>, double> kinetic_roots_p(const GasModel& g,
                                                         const RefState& ref,
                                                         double u) {
  if (u == ref.u0) throw std::domain_error("htl kinetic_roots_p: contact");
  const double w = (u - ref.u0) * (u - ref.u0);
  const double C = 3.0 * g.a2 * ref.T0 * (1.0 + ref.alpha0);
  // C (p-p0)^2 = w p0 (4p + p0):
  // C p^2 - (2 C p0 + 4 w p0) p + p0^2 (C - w) = 0
  const double b = 2.0 * C * ref.p0 + 4.0 * w * ref.p0;
  const double c = ref.p0 * ref.p0 * (C - w);
  const double disc = b * b - 4.0 * C * c;
  const double root = std::sqrt(disc);
  const double p_plus = (b + root) / (2.0 * C);
  std::optional<double> p_minus;
  if (c > 0.0) p_minus = 2.0 * c / (b + root);  // stable smaller root
  return {p_minus, p_plus};
}

MonotonicityReport monotonicity_report(const HugoniotCurve& curve) {
  MonotonicityReport rep{true, true, true, 0};
  for (size_t i = 1; i < curve.samples.size(); ++i) {
    const LocusSample& a = curve.samples[i - 1];
    const LocusSample& b = curve.samples[i];
    if (a.alpha < curve.ref.alpha0 || b.alpha < curve.ref.alpha0) continue;
    ++rep.checked;
    if (!(b.p > a.p)) rep.p_increasing = false;
    if (!(b.v > a.v)) rep.v_increasing = false;
    if (!(b.v < a.v)) rep.v_decreasing = false;
  }
  return rep;
}

ShockSolution solve_shock_state(const GasModel& g, const RefState& ref,
                                double u) {
  if (u == ref.u0) throw std::domain_error("htl solve_shock_state: contact");
  const double p_target = kinetic_roots_p(g, ref, u).second;
  // p increases along the locus above T0; root-find ln p(locus(T)) = ln p+
  auto resid = [&](double lnT) {
    const double T = std::exp(lnT);
    return std::log(pressure(g, locus_alpha_at_T(g, ref, T), T)) -
           std::log(p_target);
  };
  double lo = std::log(ref.T0), hi = lo, h = 0.02;
  int k = 0;
  while (resid(hi) <= 0.0) {
    if (++k >= 300) throw NumericalError("htl solve: no bracket");
    lo = hi;
    hi += h;
    h *= 1.5;
  }
  const double T = std::exp(find_root(resid, {lo, hi}, 1e-15, 300));
  ShockSolution sol;
  sol.back = ref;
  sol.front = htl::state_from_alphaT(g, locus_alpha_at_T(g, ref, T), T);
  sol.u_front = u;
  const double dp = sol.front.p - ref.p0;
  const double dv = sol.front.v - ref.v0;
  sol.m = std::copysign(std::sqrt(-dp / dv), dp / (u - ref.u0));
  sol.s = ref.u0 + sol.m * ref.v0;
  sol.dS = g.a2 * (sol.front.eta - ref.eta0);
  return sol;
}

}  // namespace iongas::htl
