// Scalar numerical kernels shared by the thermodynamics and wave-structure
// modules: bracketed root finding, adaptive embedded Runge-Kutta integration,
// central finite differences and log-domain helpers.
#pragma once

#include <Eigen/Core>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace iongas {

// Thrown when an iteration budget is exhausted or a solver cannot make
// progress (distinct from domain errors on the inputs themselves).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Bracket {
  double lo;
  double hi;
};

struct RootOptions {
  double rel_tol = 1e-14;
  int max_iter = 200;
};

// Bisection/secant hybrid on a sign-changing bracket. The bracket is never
// lost; an Illinois-style weight keeps false-position from stalling on one
// endpoint. The iteration path is invariant under exact positive rescaling
// of f (only sign tests and f-ratios enter the update).
double find_root(const std::function<double(double)>& f, Bracket b,
                 double rel_tol = 1e-14, int max_iter = 200);

// log(1 + e^x) without overflow for large |x|.
inline double log1p_exp(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

// (f(x+h) - f(x-h)) / 2h
double central_diff(const std::function<double(double)>& f, double x, double h);

// (f(x+h) - 2 f(x) + f(x-h)) / h^2
double second_central_diff(const std::function<double(double)>& f, double x,
                           double h);

enum class OdeStatus { completed, truncated_at_singularity };

struct OdeSample {
  double s;
  Eigen::VectorXd y;
};

struct OdeResult {
  std::vector<OdeSample> samples;  // strictly monotone in s, includes s0
  OdeStatus status = OdeStatus::completed;
  double s_end() const { return samples.back().s; }
  const Eigen::VectorXd& y_end() const { return samples.back().y; }
};

using OdeRhs =
    std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>;

// Dormand-Prince 5(4) with error-per-unit-step control: a step of size h is
// accepted when the embedded error estimate stays below rel_tol * (|y| scale)
// * h / |span|, so the accumulated error over the whole span is proportional
// to rel_tol. Integrates forward or backward depending on span orientation.
// A step-size underflow (singular right-hand side before the end of the
// span) yields status truncated_at_singularity with the last valid sample.
OdeResult integrate_ode(const OdeRhs& rhs, const Eigen::VectorXd& y0,
                        double s0, double s1, double rel_tol,
                        double abs_tol = 0.0);

}  // namespace iongas
