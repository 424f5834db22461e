// Hugoniot locus of a reference state: the thermodynamic part as a monotone
// curve T(alpha) (zero set of the residual F), the kinetic part G = 0 with
// its two temperature branches, the unique shock-state intersection for a
// prescribed velocity, shock speeds and the entropy jump with the weak-shock
// cubic estimate.
//
// All pressure/volume ratios inside F and G are formed as exponentials of
// log differences so the Boltzmann factors never overflow; off the locus the
// guarded ratios saturate at +inf with the correct residual sign.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iongas/thermo.hpp"

namespace iongas {

// Anchor state of a Hugoniot construction; the reference plays the role of
// the "-" (back) side in the jump relations.
struct RefState {
  double alpha0;
  double T0;
  double u0;
  AlphaRep rep0;
  double p0;
  double v0;
  double ln_p0;
  double ln_v0;
  double eta0;      // entropy_alphaT at the anchor
  double scale_F;   // 4 T0 (1+alpha0) + 2 Ti alpha0, residual normalization
};

RefState make_ref_state(const GasModel& g, double alpha0, double T0,
                        double u0 = 0.0);

struct LocusSample {
  double alpha;
  double ln_alpha;
  double ln_one_minus;
  double T;
  double p;     // exp(ln_p); may flush to 0/inf at extreme tails
  double v;
  double ln_p;
  double ln_v;
  double F_residual;
};

struct HugoniotCurve {
  RefState ref;
  std::vector<LocusSample> samples;  // ascending alpha
};

// Residual of the thermodynamic jump condition at (alpha,T); zero exactly on
// the locus, F(alpha0,T0) = 0. Equals (2/a2) [H - H0 - (p-p0)(v+v0)/2].
double thermo_residual_F(const GasModel& g, const AlphaRep& a, double T,
                         const RefState& ref);
double thermo_residual_F(const GasModel& g, double alpha, double T,
                         const RefState& ref);

// Phi > 0 marks the region where the locus is a graph over alpha; it equals
// -F_T / (4(1+alpha)).
double hugoniot_phi(const GasModel& g, const AlphaRep& a, double T,
                    const RefState& ref);

// dT/dalpha of the implicit curve F = 0; strictly positive on the locus.
// Throws NumericalError when Phi <= 0 is met (tracing fault off the locus).
double thermo_slope_dT_dalpha(const GasModel& g, double alpha, double T,
                              const RefState& ref);

// d ln T / d ln alpha in the log-log chart (stable for alpha near 0).
double thermo_loglog_slope(const GasModel& g, const AlphaRep& a, double T,
                           const RefState& ref);

// The unique T with F(alpha, T) = 0, bracketed by geometric expansion of
// ln T around the hint.
double locus_temperature(const GasModel& g, const RefState& ref,
                         const AlphaRep& a, double T_hint);

// The unique alpha with F(alpha, T) = 0 at fixed T (F is strictly increasing
// in alpha), resolved in ln alpha below 1/2 and in ln(1-alpha) above.
AlphaRep locus_alpha_at_T(const GasModel& g, const RefState& ref, double T);

// Predictor-corrector trace of the thermodynamic part over n samples uniform
// in ln alpha between alpha_lo and alpha_hi (range must contain alpha0).
HugoniotCurve trace_thermo_locus(const GasModel& g, const RefState& ref,
                                 double alpha_lo, double alpha_hi, int n);

// Kinetic-part residual G(alpha, u, T); G = 0 defines the states reachable
// with velocity u. G(alpha0, u, T0) = -(u-u0)^2/(a2 T0 (1+alpha0)).
double kinetic_residual_G(const GasModel& g, const AlphaRep& a, double u,
                          double T, const RefState& ref);
double kinetic_residual_G(const GasModel& g, double alpha, double u, double T,
                          const RefState& ref);

// The separator temperature T* with p(alpha, T*) = p0.
double kinetic_T_star(const GasModel& g, double alpha, const RefState& ref);

// The two roots T- < T* < T+ of G(alpha, u, .) = 0 for u != u0;
// p(alpha,T+) > p0 and p(alpha,T-) < p0.
std::pair<double, double> kinetic_roots(const GasModel& g, double alpha,
                                        double u, const RefState& ref);

struct ShockSolution {
  RefState back;
  ThermoState front;
  double u_front;
  double m;                // Lagrangian mass flux rho(s - u), sign from [p]/[u]
  double s;                // Eulerian front speed
  double dS;               // physical entropy jump a2 (eta+ - eta-)
  double bethe_estimate;   // (1/(12 T-)) (d2v/dp2)_S (p+ - p-)^3
  double production;       // -m dS
  bool below_reference_branch = false;
  bool uniqueness_guaranteed = true;
};

// The unique Hugoniot point with alpha in (alpha0, 1) for velocity u != u0,
// found by monotone root finding of G along the traced locus.
ShockSolution solve_shock_state(const GasModel& g, const RefState& ref,
                                double u);

// Secondary lookup on the branch alpha < alpha0. An intersection is
// guaranteed by theory only when (u-u0)^2 <= 2 a2 Ti alpha0; the result carries
// uniqueness_guaranteed = false. Returns nullopt when the scan finds no sign
// change.
std::optional<ShockSolution> solve_shock_state_below(const GasModel& g,
                                                     const RefState& ref,
                                                     double u);

// m and s recomputed from the stored states; both evaluations of m agree to
// the stated residual tolerances. Throws on a zero density jump (contact).
std::pair<double, double> shock_speeds(const GasModel& g,
                                       const ShockSolution& sol);

struct EntropyJump {
  double dS;
  double bethe_estimate;
  double production;
};

EntropyJump entropy_jump(const GasModel& g, const ShockSolution& sol);

// Contact discontinuity: p = p0 and u = u0 with alpha slaved to (p0, T).
ThermoState contact_state(const GasModel& g, const RefState& ref, double T);

}  // namespace iongas
