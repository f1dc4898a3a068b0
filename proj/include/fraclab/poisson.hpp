#pragma once

#include "fraclab/quadrature.hpp"
#include "fraclab/test_function.hpp"

// Subordinated Poisson semigroup on the half-line:
//
//   P[tau] f(t) = (1/c) * integral_0^inf tau^(2a) exp(-tau^2/(4s)) s^(-1-a)
//                 f(t - s) ds,   c = 4^a Gamma(a),
//
// acting by averages of the past only (causal).  P[tau] 1 = 1 for every tau.
// As tau -> 0, the flux -nc * tau^(1-2a) d/dtau P[tau] f(t) converges to the
// one-sided fractional derivative
//
//   D^a f(t) = (1/Gamma(-a)) * integral_0^inf (f(t-s) - f(t)) s^(-a-1) ds,
//
// with nc = 4^(a-1/2) Gamma(a) / Gamma(1-a).  U(t,tau) = P[tau] f(t) solves
// the degenerate extension equation
//
//   -(d/dt)_+ U + ((1-2a)/tau) U_tau + U_tautau = 0,
//
// where (d/dt)_+ is the right-sided difference limit (f(t+h)-f(t))/h.
//
// All evaluators integrate the convolution with explicit splits at the jump
// and kink abscissae of f mapped into the s domain, extended far enough that
// the crude tail bound tau^(2a) S^(-a) / (a c) * sup|f| falls below a fixed
// fraction of sup|f|; past that point no oscillation of f can contaminate
// the result.

namespace fraclab::poisson {

struct PoissonParams {
  double alpha;  // order, 0 < alpha < 1
  double tau;    // extension height, tau > 0
  void validate() const;
};

// 4^alpha * Gamma(alpha): normalizing mass of one kernel layer.
double norm_const(double alpha);

// 4^(alpha-1/2) * Gamma(alpha) / Gamma(1-alpha): flux-to-derivative factor.
double neumann_const(double alpha);

// P[tau] f(t).  rel_tol steers the adaptive quadrature; the tail truncation
// is fixed so its error is below 1e-10 * sup|f| regardless of rel_tol.
double poisson_apply(const funcspace::TestFunction& f, double t,
                     const PoissonParams& p, double rel_tol = 1e-9);

// d/dtau P[tau] f(t), computed from the differentiated kernel (no finite
// differences): factor (2a/tau - tau/(2s)) under the same integral.
double poisson_dtau(const funcspace::TestFunction& f, double t,
                    const PoissonParams& p, double rel_tol = 1e-9);

// -nc * tau^(1-2a) * d/dtau P[tau] f(t): approximates D^a f(t) as tau -> 0.
double neumann_flux(const funcspace::TestFunction& f, double t,
                    const PoissonParams& p, double rel_tol = 1e-9);

// D^a f(t) by direct quadrature.  Requires a smooth f (constant or smooth
// bump); throws std::invalid_argument otherwise, since the difference
// quotient integral does not converge absolutely across jumps.
double dleft_frac(const funcspace::TestFunction& f, double t, double alpha,
                  double rel_tol = 1e-9);

// The three terms of the extension equation at (t, tau), discretized with a
// right-sided first difference in t (step h_tau^2) and central differences
// in tau (step h_tau).  residual() -> 0 at rate h_tau^2 for smooth f.
struct ExtensionTerms {
  double transport;  // -(U(t+h,tau) - U(t,tau)) / h,  h = h_tau^2
  double drift;      // ((1-2a)/tau) * central d/dtau
  double second;     // central second difference in tau
  double residual() const { return transport + drift + second; }
};

ExtensionTerms extension_terms(const funcspace::TestFunction& f, double t,
                               const PoissonParams& p, double h_tau,
                               double rel_tol = 1e-10);

}  // namespace fraclab::poisson
