// Eigenstructure of the gasdynamics system in Lagrangian form, the
// genuine-nonlinearity indicator f(alpha,T) for the acoustic fields, and the
// inflection locus f = 0 traced over a temperature range.
#pragma once

#include <Eigen/Core>
#include <vector>

#include "iongas/thermo.hpp"

namespace iongas {

// Coordinate system used to express the eigenvectors.
enum class Coords { pT, alphaT };

struct EigenDecomposition {
  double lambda_minus;
  double lambda_zero;
  double lambda_plus;
  Eigen::Vector3d r_minus;
  Eigen::Vector3d r_zero;
  Eigen::Vector3d r_plus;
  Coords coords;
};

// One branch of the inflection locus: (alpha, T) samples with |f| residuals,
// strictly monotone in T.
struct InflectionCurve {
  enum class Branch { left, right };
  Branch branch;
  std::vector<double> alpha;
  std::vector<double> T;
  std::vector<double> f_residual;
  bool empty() const { return T.empty(); }
};

struct InflectionLocus {
  InflectionCurve left;
  InflectionCurve right;
};

// lambda^2 = p^2 A / (a2 T (1+alpha) B); the positive root is the Lagrangian
// acoustic speed. In Eulerian coordinates the wave speeds are u -+ lambda, u.
double lagrangian_sound_speed_alphaT(const GasModel& g, double alpha, double T,
                                     double p);
double lagrangian_sound_speed(const GasModel& g, double p, double T);

EigenDecomposition eigen(const GasModel& g, const ThermoState& s,
                         Coords coords);

// Quasilinear coefficient matrix of the (p,u,T) system, for eigen checks.
Eigen::Matrix3d system_matrix_pT(const GasModel& g, double p, double T);

// Jacobian d(p,u,T)/d(alpha,u,T) used to push (alpha,u,T) eigenvectors
// forward into (p,u,T) components.
Eigen::Matrix3d jacobian_pT_from_alphaT(const GasModel& g, double alpha,
                                        double T);

// The indicator f(alpha,T): R+ grad(log lambda+) = (2/(pA)) f, so the acoustic
// fields are genuinely nonlinear exactly where f > 0. Depends on (alpha,T)
// only through alpha and Ti/T.
double inflection_f(const GasModel& g, double alpha, double T);

// R+ grad(log lambda+) itself, i.e. 2 f / (p A) with p = p(alpha,T).
double gn_log_rate_plus(const GasModel& g, double alpha, double T);

// Sufficient certificate: alpha <= 60 (T/Ti)^3 or Ti/T <= 54.5375. When it
// holds, f > 0; when it is silent the sign of f decides.
bool is_gn_sufficient(const GasModel& g, double alpha, double T);

// Zeros of alpha -> f(alpha,T) for each of n temperatures in [T_lo, T_hi],
// located by a sign-change scan over ln alpha in [ln_alpha_floor, ln 0.5]
// with `seeds` probe points and bracketed refinement. Roots are classified
// left/right against the geometric mean of the two small-T asymptotes
// 60 (T/Ti)^3 and (T/Ti)^{3/2}. Temperatures with no sign change contribute
// to neither branch; both curves empty is a valid result.
InflectionLocus trace_inflection_locus(const GasModel& g, double T_lo,
                                       double T_hi, int n,
                                       double ln_alpha_floor = -27.631021116,
                                       int seeds = 200);

}  // namespace iongas
