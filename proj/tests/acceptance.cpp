// Acceptance suite: one check per numbered criterion, each printed as a
// single PASS/FAIL line with the measured quantities. The process exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "iongas/characteristics.hpp"
#include "iongas/htl.hpp"
#include "iongas/hugoniot.hpp"
#include "iongas/numerics.hpp"
#include "iongas/rarefaction.hpp"
#include "iongas/thermo.hpp"

using namespace iongas;

namespace {

const GasModel hyd = GasModel::hydrogen();

int failures = 0;

void report(int id, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

double fit_slope(const std::vector<double>& lx, const std::vector<double>& ly) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = int(lx.size());
  for (int i = 0; i < n; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

char buf[512];

// ---- 1: Saha anchors ------------------------------------------------------
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const double a750 = alpha_from_pT(hyd, 1466.3, 750.0);
  const double a300 = alpha_from_pT(hyd, 1466.3, 300.0);
  const auto t1 = std::chrono::steady_clock::now();
  const double us =
      std::chrono::duration<double, std::micro>(t1 - t0).count();
  const double r1 = std::abs(a750 / 3.8418e-45 - 1.0);
  const double r2 = std::abs(a300 / 3.5929e-114 - 1.0);
  const bool ok = r1 <= 1e-3 && r2 <= 1e-3 && us < 1000.0;
  std::snprintf(buf, sizeof buf,
                "rel errs %.2e / %.2e, runtime %.1f us", r1, r2, us);
  report(1, "Saha anchor values", ok, buf);
}

// ---- 2: GN threshold ------------------------------------------------------
void criterion_2() {
  auto cubic = [](double x) {
    return x * x * x - 51.0 * x * x - 180.0 * x - 705.0;
  };
  const double root = find_root(cubic, {50.0, 60.0}, 1e-15, 200);
  const double T_gn = hyd.Ti / root;
  const bool ok =
      root >= 54.537 && root <= 54.538 && std::abs(T_gn - 2893.4) <= 0.5;
  std::snprintf(buf, sizeof buf, "root %.6f, Ti/root %.2f K", root, T_gn);
  report(2, "GN threshold root and temperature", ok, buf);
}

// ---- 3: inflection-locus asymptotics over T/Ti in [1e-3, 1e-2] ------------
void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto locus =
      trace_inflection_locus(hyd, 1e-3 * hyd.Ti, 1e-2 * hyd.Ti, 20);
  std::vector<double> lTl, lal, lTr, lar;
  for (size_t i = 0; i < locus.left.T.size(); ++i) {
    lTl.push_back(std::log(locus.left.T[i] / hyd.Ti));
    lal.push_back(std::log(locus.left.alpha[i]));
  }
  for (size_t i = 0; i < locus.right.T.size(); ++i) {
    lTr.push_back(std::log(locus.right.T[i] / hyd.Ti));
    lar.push_back(std::log(locus.right.alpha[i]));
  }
  const auto t1 = std::chrono::steady_clock::now();
  const double secs = std::chrono::duration<double>(t1 - t0).count();
  if (lTl.size() < 2 || lTr.size() < 2) {
    report(3, "inflection-locus asymptotics", false, "branches not traced");
    return;
  }
  const double sl = fit_slope(lTl, lal);
  const double sr = fit_slope(lTr, lar);
  const double coeff =
      locus.left.alpha.front() / std::pow(locus.left.T.front() / hyd.Ti, 3.0);
  const bool ok = std::abs(sl / 3.0 - 1.0) <= 0.02 &&
                  std::abs(sr / 1.5 - 1.0) <= 0.02 &&
                  std::abs(coeff / 60.0 - 1.0) <= 0.05 && secs < 5.0;
  std::snprintf(buf, sizeof buf,
                "left slope %.4f (want 3 +- 2%%), right slope %.4f (want 1.5 "
                "+- 2%%), left coeff %.2f (want 60 +- 5%%), %.2f s",
                sl, sr, coeff, secs);
  report(3, "inflection-locus asymptotics on the stated window", ok, buf);
}

// ---- 4: Maxwell / first-law derivative suite -------------------------------
void criterion_4() {
  double worst_maxwell = 0.0, worst_partial = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double alpha =
        std::pow(10.0, -30.0 + i * (30.0 + std::log10(0.99)) / 19.0);
    for (int j = 0; j < 20; ++j) {
      const double T = 500.0 * std::pow(120.0, j / 19.0);
      const double p = pressure_from_alphaT(hyd, alpha, T);
      const ThermoState s = state_from_pT(hyd, p, T);
      const PartialsBundle d = partials(hyd, p, T);
      const double hp = 1e-6 * p, hT = 1e-6 * T;

      const double vT = central_diff(
          [&](double x) { return state_from_pT(hyd, p, x).v; }, T, hT);
      const double etap = central_diff(
          [&](double x) { return entropy_pT(hyd, x, T); }, p, hp);
      worst_maxwell = std::max(
          worst_maxwell, std::abs(vT + hyd.a2 * etap) / (s.v / T));

      auto rel = [](double got, double want) {
        return std::abs(got - want) / std::abs(want);
      };
      worst_partial = std::max(
          worst_partial,
          rel(central_diff(
                  [&](double x) { return alpha_from_pT(hyd, x, T); }, p, hp),
              d.dalpha_dp));
      worst_partial = std::max(worst_partial, rel(vT, d.v_T));
      worst_partial = std::max(worst_partial, rel(etap, d.eta_p));
      worst_partial = std::max(
          worst_partial,
          rel(central_diff([&](double x) { return entropy_pT(hyd, p, x); }, T,
                           hT),
              d.eta_T));
      const double rho = s.rho;
      worst_partial = std::max(
          worst_partial,
          rel(central_diff(
                  [&](double x) { return state_from_rhoT(hyd, rho, x).e; }, T,
                  hT),
              d.e_T));
    }
  }
  const bool ok = worst_maxwell <= 1e-6 && worst_partial <= 1e-6;
  std::snprintf(buf, sizeof buf,
                "worst Maxwell residual %.2e, worst partial mismatch %.2e",
                worst_maxwell, worst_partial);
  report(4, "Maxwell and closed-form derivative suite", ok, buf);
}

// ---- 5: Hugoniot thermodynamic part ----------------------------------------
void criterion_5() {
  const RefState ref = make_ref_state(hyd, 1e-3, 1e4);
  bool monotone = true, residuals = true, pv = true;

  const HugoniotCurve curve = trace_thermo_locus(hyd, ref, 1e-8, 0.9999, 200);
  for (size_t i = 1; i < curve.samples.size(); ++i) {
    if (!(curve.samples[i].T > curve.samples[i - 1].T)) monotone = false;
    if (curve.samples[i - 1].alpha >= ref.alpha0) {
      if (!(curve.samples[i].ln_p > curve.samples[i - 1].ln_p)) pv = false;
      if (!(curve.samples[i].ln_v < curve.samples[i - 1].ln_v)) pv = false;
    }
  }
  for (const auto& s : curve.samples)
    if (std::abs(s.F_residual) > 1e-9 * ref.scale_F) residuals = false;

  // cold-end prefactor
  const AlphaRep deep = AlphaRep::from_ln_alpha(-400.0);
  const double T_deep = locus_temperature(hyd, ref, deep, ref.T0 / 20.0);
  const double A = 2.0 * ref.alpha0 / std::sqrt(1.0 - ref.alpha0) *
                   std::sqrt(1.0 + hyd.Ti * ref.alpha0 /
                                       (2.0 * ref.T0 * (1.0 + ref.alpha0)));
  const double cold_ratio =
      std::exp(-400.0 - (std::log(A) + 0.75 * std::log(T_deep / ref.T0) -
                         hyd.Ti / (2.0 * T_deep) + hyd.Ti / (2.0 * ref.T0)));

  // hot-end prefactor
  const AlphaRep hot = AlphaRep::from_ln_one_minus(std::log(1e-7));
  const double T_hot = locus_temperature(hyd, ref, hot, ref.T0 * 1e4);
  const double B = 4.0 * (1.0 - ref.alpha0) / (ref.alpha0 * ref.alpha0) *
                   std::exp(-hyd.Ti / ref.T0);
  const double hot_ratio = 1e-7 * std::pow(T_hot / ref.T0, 1.5) / B;

  const bool ok = monotone && residuals && pv &&
                  std::abs(cold_ratio - 1.0) <= 0.05 &&
                  std::abs(hot_ratio - 1.0) <= 0.05;
  std::snprintf(buf, sizeof buf,
                "monotone %d, residuals %d, p/v %d, cold prefactor ratio "
                "%.4f, hot %.4f",
                monotone, residuals, pv, cold_ratio, hot_ratio);
  report(5, "Hugoniot thermodynamic part", ok, buf);
}

// ---- 6: shock uniqueness ----------------------------------------------------
void criterion_6() {
  const RefState ref = make_ref_state(hyd, 1e-3, 1e4);
  const HugoniotCurve curve =
      trace_thermo_locus(hyd, ref, ref.alpha0, 0.999999, 10000);
  const double a_speed = std::sqrt(hyd.a2) * std::sqrt(ref.T0);
  bool ok = true;
  double worst_resid = 0.0;
  for (int k = 1; k <= 10; ++k) {
    const double u = ref.u0 + 0.5 * k * a_speed;
    const double w =
        (u - ref.u0) * (u - ref.u0) / (hyd.a2 * ref.T0 * (1.0 + ref.alpha0));
    int crossings = 0;
    bool prev_known = false, prev_sign = false;
    for (const auto& s : curve.samples) {
      if (s.alpha <= ref.alpha0) continue;
      const double g0 = std::exp(s.ln_p - ref.ln_p0) +
                        std::exp(s.ln_v - ref.ln_v0) -
                        s.T * (1.0 + s.alpha) /
                            (ref.T0 * (1.0 + ref.alpha0)) -
                        1.0;
      const bool sign = (g0 - w) > 0.0;
      if (prev_known && sign != prev_sign) ++crossings;
      prev_known = true;
      prev_sign = sign;
    }
    if (crossings != 1) ok = false;

    const ShockSolution sol = solve_shock_state(hyd, ref, u);
    const double rb = 1.0 / ref.v0, rf = sol.front.rho;
    const double r1 = (sol.s * (rf - rb) - (rf * u - rb * ref.u0)) /
                      (std::abs(sol.s) * (rf + rb) + rf * std::abs(u) + rb);
    const double r2 =
        (sol.s * (rf * u - rb * ref.u0) -
         (rf * u * u + sol.front.p - rb * ref.u0 * ref.u0 - ref.p0)) /
        (rf * u * u + sol.front.p + ref.p0);
    const double Eb = specific_internal_energy(hyd, ref.alpha0, ref.T0);
    const double Ef = sol.front.e + 0.5 * u * u;
    const double r3 = (sol.s * (rf * Ef - rb * Eb) -
                       (rf * u * Ef + sol.front.p * u - rb * ref.u0 * Eb)) /
                      (std::abs(sol.s) * (rf * Ef + rb * Eb));
    worst_resid = std::max({worst_resid, std::abs(r1), std::abs(r2),
                            std::abs(r3)});
  }
  ok = ok && worst_resid <= 1e-8;
  std::snprintf(buf, sizeof buf,
                "10 velocities, single crossing each, worst jump residual "
                "%.2e",
                worst_resid);
  report(6, "shock uniqueness and jump residuals", ok, buf);
}

// ---- 7: Bethe cubic ---------------------------------------------------------
void criterion_7() {
  const RefState ref = make_ref_state(hyd, 1e-4, 3200.0);
  auto shock_at = [&](double eps) {
    auto resid = [&](double lnT) {
      const double T = std::exp(lnT);
      const AlphaRep a = locus_alpha_at_T(hyd, ref, T);
      return ln_pressure(hyd, a, T) - ref.ln_p0 - std::log1p(eps);
    };
    double lo = std::log(ref.T0), hi = lo, h = 0.01;
    while (resid(hi) <= 0.0) {
      hi += h;
      h *= 1.5;
    }
    const double T = std::exp(find_root(resid, {lo, hi}, 1e-15, 300));
    const AlphaRep a = locus_alpha_at_T(hyd, ref, T);
    const double p = std::exp(ln_pressure(hyd, a, T));
    const double v = std::exp(ln_specific_volume(hyd, a, T));
    const double du = -std::sqrt(-(p - ref.p0) * (v - ref.v0));
    return solve_shock_state(hyd, ref, ref.u0 + du);
  };

  const ShockSolution probe = shock_at(1e-2);
  const double ratio = probe.dS / probe.bethe_estimate;
  const bool gn = is_gn_sufficient(hyd, ref.alpha0, ref.T0);

  std::vector<double> ldp, lds;
  bool production_ok = true;
  for (double eps : {1e-3, 3e-3, 1e-2, 3e-2, 1e-1}) {
    const ShockSolution sol = shock_at(eps);
    ldp.push_back(std::log(sol.front.p - ref.p0));
    lds.push_back(std::log(sol.dS));
    if (!(sol.production > 0.0)) production_ok = false;
  }
  const double slope = fit_slope(ldp, lds);
  const bool ok = gn && ratio >= 0.9 && ratio <= 1.1 &&
                  std::abs(slope - 3.0) <= 0.1 && production_ok;
  std::snprintf(buf, sizeof buf,
                "certified ref %d, ratio %.4f, slope %.3f, production > 0: %d",
                gn, ratio, slope, production_ok);
  report(7, "Bethe cubic and entropy production", ok, buf);
}

// ---- 8: rarefaction suite ---------------------------------------------------
void criterion_8() {
  const double resid_sym =
      std::abs(2.0 * std::log((1.0 - alpha_infinity(hyd, 3.75)) /
                              alpha_infinity(hyd, 3.75)) -
               2.5 * (1.0 + alpha_infinity(hyd, 3.75)) + 3.75);

  const RefState ref = make_ref_state(hyd, 1e-3, 9000.0, 0.0);
  const double ainf = alpha_infinity(hyd, ref.eta0);
  double worst_drift = 0.0;
  std::vector<double> le, lu;
  for (double eps : {1e-8, 1e-9, 1e-10, 1e-11}) {
    const auto seg =
        integrate_rarefaction(hyd, ref, WaveFamily::plus, ainf - eps, 48);
    for (const auto& s : seg.samples)
      worst_drift =
          std::max(worst_drift, std::abs(s.eta_drift / ref.eta0));
    le.push_back(std::log(eps));
    lu.push_back(std::log(std::abs(seg.samples.back().u)));
  }
  const auto seg_minus =
      integrate_rarefaction(hyd, ref, WaveFamily::minus, 1e-10, 48);
  for (const auto& s : seg_minus.samples)
    worst_drift = std::max(worst_drift, std::abs(s.eta_drift / ref.eta0));

  const double expo = -fit_slope(le, lu);
  const bool ok = resid_sym <= 1e-12 &&
                  std::abs(alpha_infinity(hyd, 3.75) - 0.5) <= 1e-12 &&
                  worst_drift <= 1e-8 && std::abs(expo / 0.5 - 1.0) <= 0.05;
  std::snprintf(buf, sizeof buf,
                "alpha_inf(15/4) residual %.1e, drift %.2e, blow-up exponent "
                "%.4f",
                resid_sym, worst_drift, expo);
  report(8, "rarefaction suite", ok, buf);
}

// ---- 9: HTL suite -----------------------------------------------------------
void criterion_9() {
  // exact nonlinearity rate
  double worst_rate = 0.0;
  for (double a : {1e-4, 0.3, 0.95})
    for (double T : {400.0, 8000.0}) {
      const htl::HtlState s = htl::state_from_alphaT(hyd, a, T);
      worst_rate = std::max(
          worst_rate,
          std::abs(htl::eigen(hyd, s).gn_log_rate_plus * 5.0 * s.p / 4.0 -
                   1.0));
    }

  // cubic tangency at (0.4, 300 K)
  const htl::RefState ref = htl::make_ref_state(hyd, 0.4, 300.0);
  std::vector<double> ldT, lda;
  for (double dT : {0.3, 0.6, 1.2, 2.4}) {
    ldT.push_back(std::log(dT));
    lda.push_back(
        std::log(htl::locus_alpha_at_T(hyd, ref, ref.T0 + dT) - ref.alpha0));
  }
  const double expo = fit_slope(ldT, lda);

  // kinetic identity with the polytropic form
  double worst_kin = 0.0;
  for (double ratio : {0.3, 1.5, 4.0, 20.0}) {
    const double p = ratio * ref.p0;
    const double poly = 2.0 * ref.v0 * (p - ref.p0) * (p - ref.p0) /
                        (8.0 / 3.0 * p + 2.0 / 3.0 * ref.p0);
    worst_kin = std::max(
        worst_kin, std::abs(htl::kinetic_usq(hyd, ref, p) / poly - 1.0));
  }

  // endpoint prefactors of the traced locus
  const htl::HugoniotCurve curve =
      htl::trace_thermo_locus(hyd, ref, ref.T0 * 1e-4, ref.T0 * 1e6, 60);
  const double cold_ratio =
      curve.samples.front().alpha /
      (2.0 * ref.alpha0 / std::sqrt(1.0 - ref.alpha0) * std::pow(1e-4, 0.75));
  const double hot_ratio =
      (1.0 - curve.samples.back().alpha) /
      (4.0 * (1.0 - ref.alpha0) / (ref.alpha0 * ref.alpha0) *
       std::pow(1e6, -1.5));

  const bool ok = worst_rate <= 1e-13 && std::abs(expo - 3.0) <= 0.2 &&
                  worst_kin <= 1e-13 && std::abs(cold_ratio - 1.0) <= 0.05 &&
                  std::abs(hot_ratio - 1.0) <= 0.05;
  std::snprintf(buf, sizeof buf,
                "rate dev %.1e, tangency exponent %.3f, kinetic dev %.1e, "
                "prefactors %.3f / %.3f",
                worst_rate, expo, worst_kin, cold_ratio, hot_ratio);
  report(9, "high-temperature-limit suite", ok, buf);
}

// ---- 10: polytropic limit regression ---------------------------------------
void criterion_10() {
  const RefState ref = make_ref_state(hyd, 1e-40, 1e4);
  bool adiabat_ok = true, lambda_ok = true;
  double worst_T = 0.0, worst_l = 0.0;
  for (double ratio : {0.25, 0.5, 2.0, 4.0}) {
    auto resid = [&](double lnT) {
      const double T = std::exp(lnT);
      const AlphaRep a = locus_alpha_at_T(hyd, ref, T);
      return ln_pressure(hyd, a, T) - ref.ln_p0 - std::log(ratio);
    };
    const double lnT0 = std::log(ref.T0);
    const double lnT = find_root(resid, {lnT0 - 3.0, lnT0 + 3.0}, 1e-15, 300);
    const double T = std::exp(lnT);
    const AlphaRep a = locus_alpha_at_T(hyd, ref, T);
    if (!(a.alpha() < 1e-30)) adiabat_ok = false;
    const double expect = (4.0 + ratio) / (4.0 + 1.0 / ratio);
    worst_T = std::max(worst_T, std::abs(T / ref.T0 / expect - 1.0));

    const double p = std::exp(ln_pressure(hyd, a, T));
    const double rho = p / ((1.0 + a.alpha()) * hyd.a2 * T);
    const double lam = lagrangian_sound_speed_alphaT(hyd, a.alpha(), T, p);
    worst_l = std::max(
        worst_l, std::abs(lam * lam / (5.0 / 3.0 * p * rho) - 1.0));
  }
  adiabat_ok = adiabat_ok && worst_T <= 1e-6;
  lambda_ok = worst_l <= 1e-8;
  std::snprintf(buf, sizeof buf,
                "adiabat dev %.2e, sound-speed dev %.2e", worst_T, worst_l);
  report(10, "polytropic limit regression", adiabat_ok && lambda_ok, buf);
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  const auto t1 = std::chrono::steady_clock::now();
  std::printf("acceptance total: %d/10 passed in %.1f s\n", 10 - failures,
              std::chrono::duration<double>(t1 - t0).count());
  return failures == 0 ? 0 : 1;
}
