// High-temperature-limit closure: the Boltzmann factor is dropped from the
// ionization equilibrium and the ionization term from the internal energy.
// The entropy then depends on alpha alone, alpha is a Riemann invariant of
// the acoustic fields, both of which stay genuinely nonlinear everywhere,
// and the integral curves have closed forms. Kept as a separate model from
// the exact closure (no flags switching behavior mid-computation).
#pragma once

#include <Eigen/Core>
#include <optional>
#include <utility>
#include <vector>

#include "iongas/thermo.hpp"

namespace iongas::htl {

struct HtlState {
  double alpha;
  double T;
  double p;
  double v;
  double e;
  double H;
  double eta;             // -2 ln((1-alpha)/alpha) + (5/2) alpha, constant 0
  double pseudo_entropy;  // (2/5) ln a + (3/10) ln(1+a) - (1/5) ln(1-a)
  double lambda;          // (p/a) sqrt(5 / (3 T (1+alpha)))
};

struct RefState {
  double alpha0;
  double T0;
  double u0;
  double p0;
  double v0;
  double eta0;
  double scale_F;
};

struct LocusSample {
  double alpha;
  double T;
  double p;
  double v;
  double residual;
};

struct HugoniotCurve {
  RefState ref;
  std::vector<LocusSample> samples;  // ascending T
};

struct MonotonicityReport {
  bool p_increasing;     // above the reference degree
  bool v_increasing;
  bool v_decreasing;
  int checked;
};

struct ShockSolution {
  RefState back;
  HtlState front;
  double u_front;
  double m;
  double s;
  double dS;  // a2 (eta+ - eta-)
};

double alpha_from_pT(const GasModel& g, double p, double T);
double pressure(const GasModel& g, double alpha, double T);
double specific_volume(const GasModel& g, double alpha, double T);
double entropy(double alpha);
double pseudo_entropy(double alpha);

HtlState state_from_pT(const GasModel& g, double p, double T);
HtlState state_from_alphaT(const GasModel& g, double alpha, double T);

struct EigenFields {
  double lambda_plus;
  double lambda_minus;
  Eigen::Vector3d r_plus;   // (alpha,u,T) components
  Eigen::Vector3d r_minus;
  Eigen::Vector3d r_zero;
  double gn_log_rate_plus;  // R+ grad log lambda+, equals 4/(5p) identically
};

EigenFields eigen(const GasModel& g, const HtlState& s);

// u along the integral curve of the chosen family through (p0,u0,alpha0),
// evaluated at pressure p:
// u - u0 = -+ sqrt(15(1+alpha0)) a (kappa alpha0^2/(1-alpha0^2))^{1/5}
//          (p^{1/5} - p0^{1/5}).
double integral_curve_u(const GasModel& g, double p0, double u0, double alpha0,
                        double p, bool plus_family);

RefState make_ref_state(const GasModel& g, double alpha0, double T0,
                        double u0 = 0.0);

// Thermodynamic jump residual; zero on the locus, vertical tangent at the
// reference: alpha - alpha0 = O((T-T0)^3).
double thermo_residual(const GasModel& g, double alpha, double T,
                       const RefState& ref);

// alpha on the locus at temperature T (the residual is strictly increasing
// in alpha at fixed T).
double locus_alpha_at_T(const GasModel& g, const RefState& ref, double T);

// Trace parametrized by T (uniform in ln T) because dalpha/dT and its first
// two derivatives vanish at T0.
HugoniotCurve trace_thermo_locus(const GasModel& g, const RefState& ref,
                                 double T_lo, double T_hi, int n);

// (u-u0)^2 on the kinetic part at pressure p:
// 3 a2 T0 (1+alpha0) (p-p0)^2 / (p0 (4p + p0)).
double kinetic_usq(const GasModel& g, const RefState& ref, double p);

// Pressures on the kinetic part for a given u: the compression root p+ > p0
// always exists; the expansion root p- in (0,p0) exists only while
// (u-u0)^2 < 3 a2 T0 (1+alpha0).
std::pair<std::optional<double>, double> kinetic_roots_p(const GasModel& g,
                                                         const RefState& ref,
                                                         double u);

// Sample-to-sample signs of dp and dv along the traced locus above alpha0.
MonotonicityReport monotonicity_report(const HugoniotCurve& curve);

// Unique locus point with p = p+(u) for u != u0, plus speeds and the jump of
// the HTL entropy.
ShockSolution solve_shock_state(const GasModel& g, const RefState& ref,
                                double u);

}  // namespace iongas::htl
