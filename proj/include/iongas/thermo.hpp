// Equation of state of a singly-ionized monatomic gas in thermal equilibrium.
//
// The ionization degree alpha follows from the equilibrium closure
//   alpha = (1 + kappa p T^{-5/2} e^{Ti/T})^{-1/2}
// and all state functions (p, v, e, H, eta and their first derivatives) are
// expressed through alpha and T. The Boltzmann factor e^{Ti/T} spans hundreds
// of orders of magnitude at laboratory conditions (alpha ~ 1e-114 for cold
// hydrogen), so every Saha-factor evaluation is carried out in the natural-log
// domain and alpha is representable by its logarithms at both endpoints.
#pragma once

#include <cmath>
#include <stdexcept>

namespace iongas {

// Physical constants of the gas. a2 is the specific gas constant R/m in
// J kg^-1 K^-1, kappa the equilibrium constant in the (p,T) closure with p in
// Pa and T in K, Ti the ionization temperature in K. The density-form
// constant is kappa_bar = 1/(a2*kappa).
struct GasModel {
  double a2;
  double kappa;
  double Ti;

  double kappa_bar() const { return 1.0 / (a2 * kappa); }

  static GasModel hydrogen() { return {8314.0, 29.9774, 1.578e5}; }
};

void validate(const GasModel& g);

inline double tau_of(const GasModel& g, double T) { return g.Ti / T; }
inline double q_of(const GasModel& g, double T) { return 2.5 + g.Ti / T; }
inline double phi_of(double alpha) { return 0.5 * alpha * (1.0 - alpha); }

// A = 5/2 + phi q^2 and B = 3/2 + phi (tau^2 + 3 tau + 15/4); the two
// quadratic combinations that shape the acoustic speed and its derivatives.
inline double coef_A(double alpha, double tau) {
  const double q = 2.5 + tau;
  return 2.5 + phi_of(alpha) * q * q;
}
inline double coef_B(double alpha, double tau) {
  return 1.5 + phi_of(alpha) * (tau * (tau + 3.0) + 3.75);
}

// Ionization degree held as (ln alpha, ln(1-alpha)) so both endpoints of
// (0,1) stay resolvable far beyond double range.
struct AlphaRep {
  double ln_a;
  double ln_1ma;

  double alpha() const { return std::exp(ln_a); }
  double one_minus() const { return std::exp(ln_1ma); }
  double ln_one_plus() const { return std::log1p(std::exp(ln_a)); }

  static AlphaRep from_alpha(double alpha);
  static AlphaRep from_ln_alpha(double ln_alpha);
  static AlphaRep from_ln_one_minus(double ln_one_minus);
  // alpha = (1+beta)^{-1/2} with both logs stable at either endpoint
  static AlphaRep from_log_beta(double log_beta);
};

// Equilibrium ionization degree with both endpoint logarithms intact.
AlphaRep saha_rep_from_pT(const GasModel& g, double p, double T);
AlphaRep saha_rep_from_rhoT(const GasModel& g, double rho, double T);

// One thermodynamic point. eta is the dimensionless entropy (m/R) S in the
// (alpha,T) closed form with integration constant zero; physical specific
// entropy differences are a2 * (eta - eta').
struct ThermoState {
  double alpha;
  double ln_alpha;
  double T;
  double p;
  double rho;
  double v;
  double e;
  double H;
  double eta;
  double lambda;  // Lagrangian acoustic speed, > 0
};

// First derivatives at a (p,T) point. dalpha_* are derivatives of the
// ionization degree; p_rho/p_T/e_T are taken at fixed (rho,T); eta_p/eta_T
// and v_p/v_T at fixed (p,T). Signs: p_rho>0, p_T>0, e_T>0, eta_p<0, eta_T>0.
struct PartialsBundle {
  double dalpha_dp;
  double dalpha_dT;
  double p_rho;
  double p_T;
  double e_T;
  double eta_p;
  double eta_T;
  double v_p;
  double v_T;
};

// ln of the Saha factor beta = kappa p T^{-5/2} e^{Ti/T}.
double log_saha_beta(const GasModel& g, double p, double T);

double ln_alpha_from_pT(const GasModel& g, double p, double T);
double alpha_from_pT(const GasModel& g, double p, double T);

// Explicit root of alpha^2/(1-alpha) = K with K = (kappa_bar/rho) T^{3/2}
// e^{-Ti/T}, evaluated as 2 sqrt(K)/(sqrt(K)+sqrt(K+4)) which is stable for
// all K; for ln K below the double exponent range the quadratic degenerates
// to ln alpha = ln K / 2.
double ln_alpha_from_rhoT(const GasModel& g, double rho, double T);
double alpha_from_rhoT(const GasModel& g, double rho, double T);

// p(alpha,T) = (1/kappa) (1-alpha^2)/alpha^2 T^{5/2} e^{-Ti/T}
double ln_pressure(const GasModel& g, const AlphaRep& a, double T);
double pressure_from_alphaT(const GasModel& g, double alpha, double T);

// v(alpha,T) = a2 kappa alpha^2/(1-alpha) T^{-3/2} e^{Ti/T}
double ln_specific_volume(const GasModel& g, const AlphaRep& a, double T);

double specific_internal_energy(const GasModel& g, double alpha, double T);
double specific_enthalpy(const GasModel& g, double alpha, double T);

// Dimensionless entropy, (p,T) form: -ln p + 2 atanh(alpha) + q alpha
// + (5/2) ln T, constant zero. Used by temperature_from_p_eta.
double entropy_pT(const GasModel& g, double p, double T);

// Dimensionless entropy, (alpha,T) form: -2 ln((1-alpha)/alpha) + q (1+alpha),
// constant zero. This is the canonical normalization stored in ThermoState
// and exchanged with the integral-curve module.
double entropy_alphaT(const GasModel& g, double alpha, double T);

// Fixed offset entropy_alphaT - entropy_pT = 5/2 - ln kappa between the two
// zero-constant forms.
double entropy_form_offset(const GasModel& g);

ThermoState state_from_pT(const GasModel& g, double p, double T);
ThermoState state_from_rhoT(const GasModel& g, double rho, double T);
ThermoState state_from_alphaT(const GasModel& g, double alpha, double T);

PartialsBundle partials(const GasModel& g, double p, double T);

// Unique T with entropy_pT(p,T) = eta, by bracketed root finding from the
// ideal-gas seed T = exp(2(eta + ln p)/5); eta_T > 0 makes the residual
// monotone in T.
double temperature_from_p_eta(const GasModel& g, double p, double eta);

}  // namespace iongas
