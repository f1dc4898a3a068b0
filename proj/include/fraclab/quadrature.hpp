#pragma once
// Adaptive Gauss-Kronrod (7,15) quadrature on finite intervals and on the
// half-line (0,inf).  The half-line is split at a pivot; the tail is mapped
// by u = 1/s and the origin piece by s = u^2, so that algebraic endpoint
// singularities s^(-beta), beta < 1, and algebraically decaying tails become
// integrable for the bisection scheme.  Interior discontinuities must be
// announced through QuadConfig::split_points; the integrator never evaluates
// a segment endpoint, so integrable endpoint blow-ups at a split are fine.
//
// Complex integrands run through the same machinery on complex values, which
// keeps one shared subdivision tree for the two components.

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraclab::quad {

struct NonConvergence : std::runtime_error {
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct EvaluationError : std::runtime_error {
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  std::vector<double> split_points;  // interior breakpoints, any order
  double pivot = 1.0;                // half-line: finite part / mapped tail boundary
};

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

struct CQuadResult {
  std::complex<double> value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<std::complex<double>(double)>;

QuadResult integrate_interval(const RealFn& f, double lo, double hi,
                              const QuadConfig& cfg = {});
QuadResult integrate_halfline(const RealFn& f, const QuadConfig& cfg = {});

CQuadResult integrate_interval_c(const ComplexFn& f, double lo, double hi,
                                 const QuadConfig& cfg = {});
CQuadResult integrate_halfline_c(const ComplexFn& f, const QuadConfig& cfg = {});

}  // namespace fraclab::quad
