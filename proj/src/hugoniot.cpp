#include "iongas/hugoniot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "iongas/characteristics.hpp"
#include "iongas/numerics.hpp"

namespace iongas {

namespace {

constexpr double kResidualTol = 1e-9;

// exp with overflow saturating to +inf; fine inside residuals where the sign
// logic only needs the dominant term.
inline double guarded_exp(double x) { return std::exp(x); }

double check_consistent(double got, double want, double scale,
                        const char* what) {
  if (std::abs(got - want) > 1e-10 * scale)
    throw std::domain_error(std::string("reference state inconsistent: ") +
                            what);
  return got;
}

}  // namespace

RefState make_ref_state(const GasModel& g, double alpha0, double T0,
                        double u0) {
  validate(g);
  if (!(T0 > 0.0)) throw std::domain_error("make_ref_state: T0 <= 0");
  RefState r;
  r.alpha0 = alpha0;
  r.T0 = T0;
  r.u0 = u0;
  r.rep0 = AlphaRep::from_alpha(alpha0);
  r.ln_p0 = ln_pressure(g, r.rep0, T0);
  r.ln_v0 = ln_specific_volume(g, r.rep0, T0);
  r.p0 = std::exp(r.ln_p0);
  r.v0 = std::exp(r.ln_v0);
  r.eta0 = entropy_alphaT(g, alpha0, T0);
  r.scale_F = 4.0 * T0 * (1.0 + alpha0) + 2.0 * g.Ti * alpha0;
  if (std::isfinite(r.p0) && r.p0 > 0.0)
    check_consistent(r.p0 * r.v0, g.a2 * T0 * (1.0 + alpha0),
                     g.a2 * T0 * (1.0 + alpha0), "p0 v0 != a2 T0 (1+alpha0)");
  return r;
}

double thermo_residual_F(const GasModel& g, const AlphaRep& a, double T,
                         const RefState& ref) {
  const double alpha = a.alpha();
  const double vr = guarded_exp(ln_specific_volume(g, a, T) - ref.ln_v0);
  const double pr = guarded_exp(ln_pressure(g, a, T) - ref.ln_p0);
  return 4.0 * (T * (1.0 + alpha) - ref.T0 * (1.0 + ref.alpha0)) +
         ref.T0 * (1.0 + ref.alpha0) * (vr - pr) +
         2.0 * g.Ti * (alpha - ref.alpha0);
}

double thermo_residual_F(const GasModel& g, double alpha, double T,
                         const RefState& ref) {
  return thermo_residual_F(g, AlphaRep::from_alpha(alpha), T, ref);
}

double hugoniot_phi(const GasModel& g, const AlphaRep& a, double T,
                    const RefState& ref) {
  const double alpha = a.alpha();
  const double tau = tau_of(g, T);
  const double pr = guarded_exp(ln_pressure(g, a, T) - ref.ln_p0);
  return 0.25 / pr * (1.5 + tau) +
         0.25 * pr * ref.T0 * (1.0 + ref.alpha0) / (T * (1.0 + alpha)) *
             (2.5 + tau) -
         1.0;
}

double thermo_loglog_slope(const GasModel& g, const AlphaRep& a, double T,
                           const RefState& ref) {
  const double alpha = a.alpha();
  const double one_m = a.one_minus();
  const double tau = tau_of(g, T);
  const double pr = guarded_exp(ln_pressure(g, a, T) - ref.ln_p0);
  // numerator alpha * F_alpha / T with the 1/alpha factors folded in
  const double num = 4.0 * alpha + 2.0 * tau * alpha +
                     (1.0 / pr) * (1.0 + alpha) * (2.0 - alpha) / one_m +
                     2.0 * pr * ref.T0 * (1.0 + ref.alpha0) /
                         (T * (1.0 + alpha) * one_m);
  const double den = 4.0 * (1.0 + alpha) * hugoniot_phi(g, a, T, ref);
  if (!(den > 0.0))
    throw NumericalError("hugoniot slope: Phi <= 0 off the locus");
  return num / den;
}

double thermo_slope_dT_dalpha(const GasModel& g, double alpha, double T,
                              const RefState& ref) {
  const AlphaRep a = AlphaRep::from_alpha(alpha);
  return thermo_loglog_slope(g, a, T, ref) * T / alpha;
}

double locus_temperature(const GasModel& g, const RefState& ref,
                         const AlphaRep& a, double T_hint) {
  auto F = [&](double lnT) { return thermo_residual_F(g, a, std::exp(lnT), ref); };
  // F -> +inf as T -> 0 and -> -inf as T -> inf with a single zero
  double lo = std::log(T_hint), hi = lo;
  double flo = F(lo), fhi = flo;
  double h = 0.05;
  for (int k = 0; flo <= 0.0; ++k) {
    if (k >= 400) throw NumericalError("locus_temperature: no lower bracket");
    lo -= h;
    h *= 1.6;
    flo = F(lo);
  }
  h = 0.05;
  for (int k = 0; fhi >= 0.0; ++k) {
    if (k >= 400) throw NumericalError("locus_temperature: no upper bracket");
    hi += h;
    h *= 1.6;
    fhi = F(hi);
  }
  if (lo >= hi) return std::exp(0.5 * (lo + hi));
  return std::exp(find_root(F, {lo, hi}, 1e-15, 300));
}

AlphaRep locus_alpha_at_T(const GasModel& g, const RefState& ref, double T) {
  // F is strictly increasing in alpha at fixed T: -inf at 0+, +inf at 1-.
  const double x_mid = std::log(0.5);
  const double f_mid = thermo_residual_F(g, AlphaRep::from_ln_alpha(x_mid), T, ref);
  if (f_mid == 0.0) return AlphaRep::from_ln_alpha(x_mid);
  if (f_mid > 0.0) {
    auto F = [&](double x) {
      return thermo_residual_F(g, AlphaRep::from_ln_alpha(x), T, ref);
    };
    double lo = x_mid, h = 0.5;
    for (int k = 0; F(lo) > 0.0; ++k) {
      if (k >= 400) throw NumericalError("locus_alpha_at_T: no lower bracket");
      lo -= h;
      h *= 1.6;
    }
    return AlphaRep::from_ln_alpha(find_root(F, {lo, std::min(lo + 2.0 * h, x_mid)},
                                             1e-15, 300));
  }
  auto Fs = [&](double s) {
    return thermo_residual_F(g, AlphaRep::from_ln_one_minus(s), T, ref);
  };
  double lo = x_mid, h = 0.5;  // s = ln(1-alpha); F decreases in s
  for (int k = 0; Fs(lo) < 0.0; ++k) {
    if (k >= 400) throw NumericalError("locus_alpha_at_T: no upper bracket");
    lo -= h;
    h *= 1.6;
  }
  return AlphaRep::from_ln_one_minus(find_root(Fs, {lo, std::min(lo + 2.0 * h, x_mid)},
                                               1e-15, 300));
}

namespace {

LocusSample make_sample(const GasModel& g, const RefState& ref,
                        const AlphaRep& a, double T) {
  LocusSample s;
  s.alpha = a.alpha();
  s.ln_alpha = a.ln_a;
  s.ln_one_minus = a.ln_1ma;
  s.T = T;
  s.ln_p = ln_pressure(g, a, T);
  s.ln_v = ln_specific_volume(g, a, T);
  s.p = std::exp(s.ln_p);
  s.v = std::exp(s.ln_v);
  s.F_residual = thermo_residual_F(g, a, T, ref);
  return s;
}

}  // namespace

HugoniotCurve trace_thermo_locus(const GasModel& g, const RefState& ref,
                                 double alpha_lo, double alpha_hi, int n) {
  if (!(alpha_lo > 0.0 && alpha_hi < 1.0 && alpha_lo < alpha_hi) || n < 2)
    throw std::domain_error("trace_thermo_locus: bad alpha range");
  if (!(alpha_lo <= ref.alpha0 && ref.alpha0 <= alpha_hi))
    throw std::domain_error("trace_thermo_locus: range must contain alpha0");

  const double x_lo = std::log(alpha_lo), x_hi = std::log(alpha_hi);
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i)
    grid[i] = x_lo + (x_hi - x_lo) * i / (n - 1);

  HugoniotCurve curve;
  curve.ref = ref;
  curve.samples.resize(n);

  const double x0 = ref.rep0.ln_a;
  const int first_above =
      int(std::lower_bound(grid.begin(), grid.end(), x0) - grid.begin());

  auto march = [&](int begin, int end, int step) {
    double x_prev = x0, T_prev = ref.T0;
    AlphaRep a_prev = ref.rep0;
    for (int i = begin; i != end; i += step) {
      const double x = grid[i];
      double T_pred = T_prev;
      try {
        const double slope = thermo_loglog_slope(g, a_prev, T_prev, ref);
        T_pred = T_prev * std::exp(std::clamp(slope * (x - x_prev), -30.0, 30.0));
      } catch (const NumericalError&) {
        // predictor falls back to the previous temperature
      }
      const AlphaRep a = AlphaRep::from_ln_alpha(x);
      const double T = locus_temperature(g, ref, a, T_pred);
      LocusSample s = make_sample(g, ref, a, T);
      if (std::abs(s.F_residual) > kResidualTol * ref.scale_F)
        throw NumericalError(
            "trace_thermo_locus: corrector residual beyond tolerance; last "
            "good ln(alpha) = " + std::to_string(x_prev));
      curve.samples[i] = s;
      x_prev = x;
      T_prev = T;
      a_prev = a;
    }
  };
  march(first_above, n, +1);
  march(first_above - 1, -1, -1);
  return curve;
}

double kinetic_residual_G(const GasModel& g, const AlphaRep& a, double u,
                          double T, const RefState& ref) {
  const double alpha = a.alpha();
  const double pr = guarded_exp(ln_pressure(g, a, T) - ref.ln_p0);
  const double vr = guarded_exp(ln_specific_volume(g, a, T) - ref.ln_v0);
  const double du = u - ref.u0;
  return pr + vr - T * (1.0 + alpha) / (ref.T0 * (1.0 + ref.alpha0)) - 1.0 -
         du * du / (g.a2 * ref.T0 * (1.0 + ref.alpha0));
}

double kinetic_residual_G(const GasModel& g, double alpha, double u, double T,
                          const RefState& ref) {
  return kinetic_residual_G(g, AlphaRep::from_alpha(alpha), u, T, ref);
}

double kinetic_T_star(const GasModel& g, double alpha, const RefState& ref) {
  const AlphaRep a = AlphaRep::from_alpha(alpha);
  auto resid = [&](double lnT) {
    return ln_pressure(g, a, std::exp(lnT)) - ref.ln_p0;
  };
  double lo = std::log(ref.T0), hi = lo, h = 0.25;
  for (int k = 0; resid(lo) >= 0.0; ++k) {
    if (k >= 300) throw NumericalError("kinetic_T_star: no lower bracket");
    lo -= h;
    h *= 1.6;
  }
  h = 0.25;
  for (int k = 0; resid(hi) <= 0.0; ++k) {
    if (k >= 300) throw NumericalError("kinetic_T_star: no upper bracket");
    hi += h;
    h *= 1.6;
  }
  return std::exp(find_root(resid, {lo, hi}, 1e-15, 300));
}

std::pair<double, double> kinetic_roots(const GasModel& g, double alpha,
                                        double u, const RefState& ref) {
  if (u == ref.u0)
    throw std::domain_error("kinetic_roots: u equals u0 (contact)");
  const AlphaRep a = AlphaRep::from_alpha(alpha);
  const double Ts = kinetic_T_star(g, alpha, ref);
  auto G = [&](double lnT) {
    return kinetic_residual_G(g, a, u, std::exp(lnT), ref);
  };
  const double lnTs = std::log(Ts);
  const double gs = G(lnTs);
  if (!(gs < 0.0))
    throw NumericalError("kinetic_roots: G(T*) not negative (diagnostics: "
                         "alpha=" + std::to_string(alpha) +
                         ", u=" + std::to_string(u) + ")");
  double roots[2];
  for (int side = 0; side < 2; ++side) {
    const double dir = side == 0 ? -1.0 : 1.0;
    double b = lnTs, h = 0.05;
    int k = 0;
    for (; G(b) <= 0.0; ++k) {
      if (k >= 300)
        throw NumericalError("kinetic_roots: root not bracketed after "
                             "expansion budget (alpha=" +
                             std::to_string(alpha) + ", u=" +
                             std::to_string(u) + ")");
      b += dir * h;
      h *= 1.6;
    }
    const double inner = b - dir * (h / 1.6);
    const double lo = std::min(inner, b), hi = std::max(inner, b);
    roots[side] = std::exp(find_root(G, {lo, hi}, 1e-15, 300));
  }
  return {roots[0], roots[1]};
}

std::pair<double, double> shock_speeds(const GasModel& g,
                                       const ShockSolution& sol) {
  const double dp = sol.front.p - sol.back.p0;
  const double dv = sol.front.v - sol.back.v0;
  const double du = sol.u_front - sol.back.u0;
  if (dv == 0.0 || du == 0.0)
    throw std::domain_error("shock_speeds: zero jump (contact)");
  const double msq = -dp / dv;
  if (!(msq >= 0.0)) throw NumericalError("shock_speeds: m^2 < 0");
  const double m = std::copysign(std::sqrt(msq), dp / du);
  // m = rho(s - u) on both sides
  const double s1 = sol.back.u0 + m * sol.back.v0;
  const double rho_f = sol.front.rho, rho_b = 1.0 / sol.back.v0;
  const double s2 =
      (rho_f * sol.u_front - rho_b * sol.back.u0) / (rho_f - rho_b);
  const double scale = std::max(std::abs(s1), std::abs(sol.u_front));
  if (std::abs(s1 - s2) > 1e-9 * std::max(scale, 1e-300) * 10.0)
    throw NumericalError("shock_speeds: inconsistent speed evaluations");
  (void)g;
  return {m, s1};
}

EntropyJump entropy_jump(const GasModel& g, const ShockSolution& sol) {
  EntropyJump j;
  j.dS = g.a2 * (sol.front.eta - sol.back.eta0);
  // second derivative of v along the isentrope through the back state
  const double p0 = sol.back.p0;
  const double eta_b = entropy_pT(g, p0, sol.back.T0);
  auto v_isentrope = [&](double p) {
    const double T = temperature_from_p_eta(g, p, eta_b);
    return (1.0 + alpha_from_pT(g, p, T)) * g.a2 * T / p;
  };
  const double vpp = second_central_diff(v_isentrope, p0, 1e-4 * p0);
  const double dp = sol.front.p - p0;
  j.bethe_estimate = vpp * dp * dp * dp / (12.0 * sol.back.T0);
  j.production = -sol.m * j.dS;
  return j;
}

namespace {

ShockSolution assemble_solution(const GasModel& g, const RefState& ref,
                                double u, const AlphaRep& a, double T,
                                bool below, bool unique) {
  ShockSolution sol;
  sol.back = ref;
  // built from the log-domain rep so extreme tails stay representable
  ThermoState& f = sol.front;
  f.alpha = a.alpha();
  f.ln_alpha = a.ln_a;
  f.T = T;
  f.p = std::exp(ln_pressure(g, a, T));
  f.v = std::exp(ln_specific_volume(g, a, T));
  f.rho = 1.0 / f.v;
  f.e = specific_internal_energy(g, f.alpha, T);
  f.H = specific_enthalpy(g, f.alpha, T);
  f.eta = -2.0 * (a.ln_1ma - a.ln_a) + q_of(g, T) * (1.0 + f.alpha);
  f.lambda = lagrangian_sound_speed_alphaT(g, f.alpha, T, f.p);
  sol.u_front = u;
  sol.below_reference_branch = below;
  sol.uniqueness_guaranteed = unique;
  auto [m, s] = shock_speeds(g, sol);
  sol.m = m;
  sol.s = s;
  const EntropyJump j = entropy_jump(g, sol);
  sol.dS = j.dS;
  sol.bethe_estimate = j.bethe_estimate;
  sol.production = j.production;
  return sol;
}

}  // namespace

ShockSolution solve_shock_state(const GasModel& g, const RefState& ref,
                                double u) {
  if (u == ref.u0)
    throw std::domain_error(
        "solve_shock_state: u equals u0 (contact discontinuity; use "
        "contact_state)");
  const double w = (u - ref.u0) * (u - ref.u0) /
                   (g.a2 * ref.T0 * (1.0 + ref.alpha0));
  auto g_of = [&](double lnT) {
    const double T = std::exp(lnT);
    const AlphaRep a = locus_alpha_at_T(g, ref, T);
    return kinetic_residual_G(g, a, u, T, ref);
  };
  // G along the locus is strictly increasing and negative at T0+
  double lo = std::log(ref.T0) + 1e-12, hi = lo, h = 0.02;
  if (g_of(lo) > 0.0) lo = std::log(ref.T0) - 1e-9;  // near-degenerate jump
  int k = 0;
  while (g_of(hi) <= 0.0) {
    if (++k >= 300)
      throw NumericalError("solve_shock_state: no sign change above alpha0 "
                           "(violates the intersection theory)");
    lo = hi;
    hi += h;
    h *= 1.5;
  }
  const double lnT = find_root(g_of, {lo, hi}, 1e-15, 300);
  const double T = std::exp(lnT);
  const AlphaRep a = locus_alpha_at_T(g, ref, T);
  const double resid = kinetic_residual_G(g, a, u, T, ref);
  if (std::abs(resid) > kResidualTol * (1.0 + w) * 10.0)
    throw NumericalError("solve_shock_state: kinetic residual out of tolerance");
  return assemble_solution(g, ref, u, a, T, false, true);
}

std::optional<ShockSolution> solve_shock_state_below(const GasModel& g,
                                                     const RefState& ref,
                                                     double u) {
  if (u == ref.u0)
    throw std::domain_error("solve_shock_state_below: u equals u0 (contact)");
  auto g_of = [&](double lnT) {
    const double T = std::exp(lnT);
    const AlphaRep a = locus_alpha_at_T(g, ref, T);
    return kinetic_residual_G(g, a, u, T, ref);
  };
  const double lnT0 = std::log(ref.T0);
  double prev = lnT0 - 1e-12;
  double g_prev = g_of(prev);
  for (int j = 1; j <= 400; ++j) {
    const double lnT = lnT0 - 0.05 * j;
    const double gj = g_of(lnT);
    if ((g_prev > 0.0) != (gj > 0.0)) {
      const double root = find_root(g_of, {lnT, prev}, 1e-15, 300);
      const double T = std::exp(root);
      const AlphaRep a = locus_alpha_at_T(g, ref, T);
      return assemble_solution(g, ref, u, a, T, true, false);
    }
    prev = lnT;
    g_prev = gj;
  }
  return std::nullopt;
}

ThermoState contact_state(const GasModel& g, const RefState& ref, double T) {
  return state_from_pT(g, ref.p0, T);
}

}  // namespace iongas
