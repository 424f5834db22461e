// Integral curves of the acoustic fields. Their projections on the
// (alpha,T)-plane are the isentropes eta(alpha,T) = eta0, available in closed
// form T = calT(alpha) on (0, alpha_inf); the velocity component follows from
// du/dalpha = -+ Lambda(alpha, calT(alpha)).
#pragma once

#include <vector>

#include "iongas/hugoniot.hpp"
#include "iongas/thermo.hpp"

namespace iongas {

enum class WaveFamily { minus, plus };

struct IsentropeSample {
  double alpha;
  double T;
  double p;
  double u_plus;
  double u_minus;
  double eta_drift;  // eta(alpha,T) - eta0
};

struct Isentrope {
  double eta0;
  double alpha_inf;
  std::vector<IsentropeSample> samples;  // ascending alpha
};

struct RarefactionSample {
  double alpha;
  double T;
  double p;
  double u;
  double lambda;     // acoustic speed of the integrated family, signed
  double eta_drift;
  bool gn_certified; // sufficient certificate at this sample
};

struct RarefactionSegment {
  WaveFamily family;
  double eta0;
  double alpha_inf;
  std::vector<RarefactionSample> samples;  // from alpha0 toward the target
};

// Unique root in (0,1) of 2 ln((1-a)/a) - (5/2)(1+a) + eta0 = 0; the
// blow-up degree of the isentrope at level eta0 (independent of Ti).
double alpha_infinity(const GasModel& g, double eta0);

// Closed-form isentrope temperature calT(alpha) = (1+alpha) Ti / d(alpha);
// valid for alpha in (0, alpha_inf), rejects the negative-temperature branch.
double isentrope_T(const GasModel& g, double alpha, double eta0);

// d^2 calT / d alpha^2 assembled from the second partial derivatives of
// eta(alpha,T); positive iff the isentrope is locally convex. Positive
// whenever Ti/T <= 4, negative for sufficiently small alpha.
double isentrope_curvature(const GasModel& g, double alpha, double eta0);

// Lambda(alpha,T) = A / (phi (1+alpha) tau) * p/lambda > 0, the magnitude of
// du/dalpha along the integral curves; p/lambda = a sqrt(T(1+alpha)) sqrt(B/A).
double du_dalpha(const GasModel& g, double alpha, double T);

// Integrates u along the integral curve of the chosen family from the anchor
// (ref.alpha0, ref.T0, ref.u0) to alpha_target; family minus walks alpha down
// (1-rarefaction branch), family plus walks alpha up toward alpha_inf
// (2-rarefaction branch). Sampling is uniform in ln alpha with n points.
RarefactionSegment integrate_rarefaction(const GasModel& g,
                                         const RefState& ref,
                                         WaveFamily family,
                                         double alpha_target, int n = 64,
                                         double rel_tol = 1e-10);

// Both velocity branches on a ln-alpha grid of the isentrope through the
// anchor; u_plus and u_minus share the value u0 at alpha0.
Isentrope sample_isentrope(const GasModel& g, const RefState& ref,
                           double alpha_lo, double alpha_hi, int n,
                           double rel_tol = 1e-10);

}  // namespace iongas
