#include "iongas/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace iongas {

double find_root(const std::function<double(double)>& f, Bracket b,
                 double rel_tol, int max_iter) {
  double a = b.lo, c = b.hi;
  if (!(a < c)) throw std::invalid_argument("find_root: bracket lo >= hi");
  if (!(rel_tol >= 1e-15))
    throw std::invalid_argument("find_root: rel_tol below 1e-15");
  double fa = f(a), fc = f(c);
  // +-inf endpoints carry a usable sign (saturated log-domain residuals);
  // only NaN is rejected
  if (std::isnan(fa) || std::isnan(fc))
    throw std::invalid_argument("find_root: NaN f at bracket endpoint");
  if (fa == 0.0) return a;
  if (fc == 0.0) return c;
  if ((fa > 0.0) == (fc > 0.0))
    throw std::invalid_argument("find_root: no sign change over bracket");

  int last_kept = 0;  // endpoint retained by the previous iteration
  for (int it = 0; it < max_iter; ++it) {
    const double scale = std::max({std::abs(a), std::abs(c), 1e-300});
    if (c - a <= rel_tol * scale) return 0.5 * (a + c);

    // secant / false-position candidate; fa,fc have opposite signs so the
    // ratio is in (0,1) and the candidate lies inside the bracket
    double x = a + (c - a) * (fa / (fa - fc));
    const double mid = 0.5 * (a + c);
    if (!(x > a && x < c)) x = mid;
    double fx = f(x);
    if (std::isnan(fx))
      throw NumericalError("find_root: NaN f inside bracket");
    if (fx == 0.0) return x;

    if ((fx > 0.0) == (fa > 0.0)) {
      a = x;
      fa = fx;
      if (last_kept == +1) fc *= 0.5;  // Illinois weighting
      last_kept = +1;
    } else {
      c = x;
      fc = fx;
      if (last_kept == -1) fa *= 0.5;
      last_kept = -1;
    }
  }
  throw NumericalError("find_root: max iterations exceeded");
}

double central_diff(const std::function<double(double)>& f, double x,
                    double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double second_central_diff(const std::function<double(double)>& f, double x,
                           double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// y5 - y4 coefficients (error estimate)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

OdeResult integrate_ode(const OdeRhs& rhs, const Eigen::VectorXd& y0,
                        double s0, double s1, double rel_tol, double abs_tol) {
  if (!(rel_tol >= 1e-13))
    throw std::invalid_argument("integrate_ode: rel_tol below 1e-13");
  OdeResult out;
  out.samples.push_back({s0, y0});
  if (s1 == s0) return out;

  const double span = std::abs(s1 - s0);
  const double dir = (s1 > s0) ? 1.0 : -1.0;
  double s = s0;
  Eigen::VectorXd y = y0;
  Eigen::VectorXd k1 = rhs(s, y);
  if (!k1.allFinite()) {
    out.status = OdeStatus::truncated_at_singularity;
    return out;
  }
  double h = 0.01 * span;
  const double h_min = 32.0 * std::numeric_limits<double>::epsilon() * span;
  const long max_steps = 4'000'000;

  Eigen::VectorXd k2, k3, k4, k5, k6, k7, ynew, err;
  for (long step = 0; step < max_steps;) {
    if (std::abs(s1 - s) <= 0.0) break;
    h = std::min(h, std::abs(s1 - s));
    const double hd = dir * h;

    k2 = rhs(s + c2 * hd, y + hd * (a21 * k1));
    k3 = rhs(s + c3 * hd, y + hd * (a31 * k1 + a32 * k2));
    k4 = rhs(s + c4 * hd, y + hd * (a41 * k1 + a42 * k2 + a43 * k3));
    k5 = rhs(s + c5 * hd,
             y + hd * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    k6 = rhs(s + hd,
             y + hd * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    ynew = y + hd * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    bool finite = k2.allFinite() && k3.allFinite() && k4.allFinite() &&
                  k5.allFinite() && k6.allFinite() && ynew.allFinite();
    double ratio = std::numeric_limits<double>::infinity();
    if (finite) {
      k7 = rhs(s + hd, ynew);  // FSAL stage
      finite = k7.allFinite();
      if (finite) {
        err = hd * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        ratio = 0.0;
        for (Eigen::Index i = 0; i < y.size(); ++i) {
          const double sc =
              abs_tol +
              rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
          if (sc > 0.0)
            ratio = std::max(ratio, std::abs(err[i]) / sc);
          else if (err[i] != 0.0)
            ratio = std::numeric_limits<double>::infinity();
        }
      }
    }

    const double budget = h / span;  // error-per-unit-step acceptance
    if (finite && ratio <= budget) {
      s = (std::abs(s1 - s) <= h * (1.0 + 1e-12)) ? s1 : s + hd;
      y.swap(ynew);
      k1.swap(k7);
      out.samples.push_back({s, y});
      ++step;
      const double grow =
          (ratio > 0.0) ? 0.9 * std::pow(budget / ratio, 0.25) : 5.0;
      h *= std::clamp(grow, 0.2, 5.0);
      if (s == s1) return out;
    } else {
      const double shrink =
          (finite && ratio > 0.0 && std::isfinite(ratio))
              ? std::clamp(0.9 * std::pow(budget / ratio, 0.25), 0.1, 0.5)
              : 0.25;
      h *= shrink;
      if (h < h_min) {
        out.status = OdeStatus::truncated_at_singularity;
        return out;
      }
    }
  }
  if (s != s1) throw NumericalError("integrate_ode: step budget exhausted");
  return out;
}

}  // namespace iongas
