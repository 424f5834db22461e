#include "iongas/thermo.hpp"

#include <cmath>

#include "iongas/characteristics.hpp"
#include "iongas/numerics.hpp"

namespace iongas {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error(std::string("non-positive or non-finite ") + what);
}

void require_open_unit(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("ionization degree must lie strictly in (0,1)");
}

}  // namespace

void validate(const GasModel& g) {
  require_positive(g.a2, "a2");
  require_positive(g.kappa, "kappa");
  require_positive(g.Ti, "Ti");
}

AlphaRep AlphaRep::from_alpha(double alpha) {
  require_open_unit(alpha);
  return {std::log(alpha), std::log1p(-alpha)};
}

AlphaRep AlphaRep::from_ln_alpha(double ln_alpha) {
  if (!(ln_alpha < 0.0))
    throw std::domain_error("ln alpha must be negative");
  return {ln_alpha, std::log1p(-std::exp(ln_alpha))};
}

AlphaRep AlphaRep::from_ln_one_minus(double ln_one_minus) {
  if (!(ln_one_minus < 0.0))
    throw std::domain_error("ln(1-alpha) must be negative");
  return {std::log1p(-std::exp(ln_one_minus)), ln_one_minus};
}

AlphaRep AlphaRep::from_log_beta(double log_beta) {
  const double x = 0.5 * log1p_exp(log_beta);  // -ln alpha
  // 1 - alpha = expm1(x) / e^x
  const double ln_1ma =
      x > 30.0 ? std::log1p(-std::exp(-x)) : std::log(std::expm1(x)) - x;
  return {-x, ln_1ma};
}

AlphaRep saha_rep_from_pT(const GasModel& g, double p, double T) {
  return AlphaRep::from_log_beta(log_saha_beta(g, p, T));
}

AlphaRep saha_rep_from_rhoT(const GasModel& g, double rho, double T) {
  require_positive(rho, "density");
  require_positive(T, "temperature");
  const double lnK = std::log(g.kappa_bar()) - std::log(rho) +
                     1.5 * std::log(T) - g.Ti / T;
  if (lnK < -700.0) {
    const double ln_a = 0.5 * lnK;
    return {ln_a, std::log1p(-std::exp(ln_a))};
  }
  const double K = std::exp(lnK);
  const double denom = std::sqrt(K) + std::sqrt(K + 4.0);
  // alpha = 2 sqrt(K)/denom, 1 - alpha = 4/denom^2
  return {0.5 * std::log(4.0 * K) - std::log(denom),
          std::log(4.0) - 2.0 * std::log(denom)};
}

double log_saha_beta(const GasModel& g, double p, double T) {
  require_positive(p, "pressure");
  require_positive(T, "temperature");
  return std::log(g.kappa) + std::log(p) - 2.5 * std::log(T) + g.Ti / T;
}

double ln_alpha_from_pT(const GasModel& g, double p, double T) {
  return -0.5 * log1p_exp(log_saha_beta(g, p, T));
}

double alpha_from_pT(const GasModel& g, double p, double T) {
  return std::exp(ln_alpha_from_pT(g, p, T));
}

double ln_alpha_from_rhoT(const GasModel& g, double rho, double T) {
  return saha_rep_from_rhoT(g, rho, T).ln_a;
}

double alpha_from_rhoT(const GasModel& g, double rho, double T) {
  return std::exp(ln_alpha_from_rhoT(g, rho, T));
}

double ln_pressure(const GasModel& g, const AlphaRep& a, double T) {
  return -std::log(g.kappa) + a.ln_1ma + a.ln_one_plus() - 2.0 * a.ln_a +
         2.5 * std::log(T) - g.Ti / T;
}

double pressure_from_alphaT(const GasModel& g, double alpha, double T) {
  require_positive(T, "temperature");
  return std::exp(ln_pressure(g, AlphaRep::from_alpha(alpha), T));
}

double ln_specific_volume(const GasModel& g, const AlphaRep& a, double T) {
  return std::log(g.a2 * g.kappa) + 2.0 * a.ln_a - a.ln_1ma -
         1.5 * std::log(T) + g.Ti / T;
}

double specific_internal_energy(const GasModel& g, double alpha, double T) {
  return 1.5 * g.a2 * (1.0 + alpha) * T + g.a2 * g.Ti * alpha;
}

double specific_enthalpy(const GasModel& g, double alpha, double T) {
  return 2.5 * g.a2 * (1.0 + alpha) * T + g.a2 * g.Ti * alpha;
}

double entropy_pT(const GasModel& g, double p, double T) {
  const AlphaRep a = saha_rep_from_pT(g, p, T);
  // 2 atanh(alpha) = ln(1+alpha) - ln(1-alpha)
  return -std::log(p) + (a.ln_one_plus() - a.ln_1ma) +
         q_of(g, T) * a.alpha() + 2.5 * std::log(T);
}

double entropy_alphaT(const GasModel& g, double alpha, double T) {
  require_open_unit(alpha);
  require_positive(T, "temperature");
  return -2.0 * (std::log1p(-alpha) - std::log(alpha)) +
         q_of(g, T) * (1.0 + alpha);
}

double entropy_form_offset(const GasModel& g) {
  return 2.5 - std::log(g.kappa);
}

namespace {

ThermoState assemble_state(const GasModel& g, const AlphaRep& a, double T,
                           double p) {
  ThermoState st;
  st.alpha = a.alpha();
  st.ln_alpha = a.ln_a;
  st.T = T;
  st.p = p;
  st.v = (1.0 + st.alpha) * g.a2 * T / p;
  st.rho = 1.0 / st.v;
  st.e = specific_internal_energy(g, st.alpha, T);
  st.H = specific_enthalpy(g, st.alpha, T);
  st.eta = -2.0 * (a.ln_1ma - a.ln_a) + q_of(g, T) * (1.0 + st.alpha);
  st.lambda = lagrangian_sound_speed_alphaT(g, st.alpha, T, p);
  return st;
}

}  // namespace

ThermoState state_from_pT(const GasModel& g, double p, double T) {
  return assemble_state(g, saha_rep_from_pT(g, p, T), T, p);
}

ThermoState state_from_rhoT(const GasModel& g, double rho, double T) {
  const AlphaRep a = saha_rep_from_rhoT(g, rho, T);
  const double p = (1.0 + a.alpha()) * g.a2 * rho * T;
  return assemble_state(g, a, T, p);
}

ThermoState state_from_alphaT(const GasModel& g, double alpha, double T) {
  require_positive(T, "temperature");
  const AlphaRep a = AlphaRep::from_alpha(alpha);
  return assemble_state(g, a, T, std::exp(ln_pressure(g, a, T)));
}

PartialsBundle partials(const GasModel& g, double p, double T) {
  const double alpha = alpha_from_pT(g, p, T);
  const double tau = tau_of(g, T);
  const double q = 2.5 + tau;
  const double phi = phi_of(alpha);
  const double omsq = 1.0 - alpha * alpha;
  const double rho = p / ((1.0 + alpha) * g.a2 * T);

  PartialsBundle d;
  d.dalpha_dp = -alpha * omsq / (2.0 * p);
  d.dalpha_dT = alpha * omsq * q / (2.0 * T);
  d.p_rho = 2.0 / (2.0 - alpha) * g.a2 * T;
  d.p_T = 2.0 / (2.0 - alpha) * (1.0 + phi * q) * g.a2 * rho;
  // (q-1)^2 phi-bundle form; equals the bracketed expansion
  // q^2 - 2q + 5/2 + 3/(alpha(1-alpha)) times alpha(1-alpha)/(2-alpha)
  d.e_T = g.a2 * (1.5 * (1.0 + alpha) +
                  (q - 1.0) * (q - 1.0) * alpha * (1.0 - alpha) /
                      (2.0 - alpha));
  d.eta_p = -(1.0 + alpha) / p * (1.0 + phi * q);
  d.eta_T = (1.0 + alpha) / T * (2.5 + phi * q * q);
  d.v_p = -g.a2 * T / (p * p) * (1.0 + alpha) * (1.0 + phi);
  d.v_T = g.a2 / p * (1.0 + alpha) * (1.0 + phi * q);
  return d;
}

double temperature_from_p_eta(const GasModel& g, double p, double eta) {
  require_positive(p, "pressure");
  const double seed = 0.4 * (eta + std::log(p));  // ln T for an ideal gas
  auto resid = [&](double lnT) { return entropy_pT(g, p, std::exp(lnT)) - eta; };

  double lo = seed, hi = seed, h = 0.25;
  double flo = resid(lo), fhi = flo;
  for (int k = 0; flo > 0.0; ++k) {
    if (k >= 200) throw NumericalError("temperature_from_p_eta: no bracket below");
    lo -= h;
    h *= 1.6;
    flo = resid(lo);
  }
  h = 0.25;
  for (int k = 0; fhi < 0.0; ++k) {
    if (k >= 200) throw NumericalError("temperature_from_p_eta: no bracket above");
    hi += h;
    h *= 1.6;
    fhi = resid(hi);
  }
  if (lo == hi) return std::exp(lo);
  return std::exp(find_root(resid, {lo, hi}, 1e-15, 200));
}

}  // namespace iongas
