#include "fraclab/poisson.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fraclab::poisson {

namespace {

using funcspace::TestFunction;

// Truncation budget for the convolution tail, relative to sup|f|.
constexpr double kTailFrac = 1e-10;
// Below s = kDeadCore * tau^2 the kernel factor is exp(-1/(4*kDeadCore)),
// utterly negligible; jump splits are not needed there.
constexpr double kDeadCore = 3e-5;

struct ConvPlan {
  bool zero = false;
  double s_end = 0.0;
  std::vector<double> splits;
};

ConvPlan plan_convolution(const TestFunction& f, double t, double alpha,
                          double tau) {
  ConvPlan plan;
  const double t2 = tau * tau;
  // X with X^(-a)/a <= kTailFrac: truncating at s = tau^2 * X leaves at most
  // kTailFrac * sup|f| of normalized mass, whatever f does out there.
  const double cut = std::pow(alpha * kTailFrac, -1.0 / alpha);
  double s_end = std::min(t2 * cut, 1e300);
  const double lo_f = f.support_lo();
  if (lo_f > -std::numeric_limits<double>::infinity()) {
    const double reach = t - lo_f;
    if (reach <= 0.0) {
      plan.zero = true;  // f(t-s) = 0 for every s > 0
      return plan;
    }
    s_end = std::min(s_end, reach);
  }
  plan.s_end = s_end;

  const double hi_f = f.support_hi();
  if (std::isfinite(hi_f) && t - hi_f > 0.0) plan.splits.push_back(t - hi_f);

  // Geometric ladder across the kernel core and power tail: one split per
  // decade keeps every panel well conditioned for the fixed-order rule.
  const double s_star = t2 / (4.0 * (1.0 + alpha));
  for (double g = 0.01 * s_star; g < s_end; g *= 10.0) plan.splits.push_back(g);

  // Jumps and kinks of f mapped into the s domain, over the live window.
  for (double x : f.feature_points(t - s_end, t - t2 * kDeadCore)) {
    const double s = t - x;
    if (s > 0.0 && s < s_end) plan.splits.push_back(s);
  }
  return plan;
}

double convolve(const TestFunction& f, double t, const PoissonParams& p,
                double rel_tol, bool differentiate_tau) {
  p.validate();
  const double a = p.alpha;
  const double tau = p.tau;
  const ConvPlan plan = plan_convolution(f, t, a, tau);
  if (plan.zero) return 0.0;

  const double inv_c = 1.0 / norm_const(a);
  const double log_tau = std::log(tau);
  const double t2 = tau * tau;

  quad::QuadConfig cfg;
  cfg.rel_tol = rel_tol;
  cfg.split_points = plan.splits;

  auto fn = [&](double s) {
    const double e = 2.0 * a * log_tau - t2 / (4.0 * s) - (1.0 + a) * std::log(s);
    if (e < -745.0) return 0.0;  // kernel underflow; skip the f evaluation
    double v = std::exp(e) * f(t - s) * inv_c;
    if (differentiate_tau) v *= 2.0 * a / tau - tau / (2.0 * s);
    return v;
  };
  return quad::integrate_interval(fn, 0.0, plan.s_end, cfg).value;
}

}  // namespace

void PoissonParams::validate() const {
  if (!std::isfinite(alpha) || !(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("PoissonParams: alpha must lie in (0,1)");
  if (!std::isfinite(tau) || !(tau > 0.0))
    throw std::invalid_argument("PoissonParams: tau must be positive");
}

double norm_const(double alpha) {
  return std::pow(4.0, alpha) * std::tgamma(alpha);
}

double neumann_const(double alpha) {
  return std::pow(4.0, alpha - 0.5) * std::tgamma(alpha) /
         std::tgamma(1.0 - alpha);
}

double poisson_apply(const funcspace::TestFunction& f, double t,
                     const PoissonParams& p, double rel_tol) {
  return convolve(f, t, p, rel_tol, false);
}

double poisson_dtau(const funcspace::TestFunction& f, double t,
                    const PoissonParams& p, double rel_tol) {
  return convolve(f, t, p, rel_tol, true);
}

double neumann_flux(const funcspace::TestFunction& f, double t,
                    const PoissonParams& p, double rel_tol) {
  p.validate();
  return -neumann_const(p.alpha) * std::pow(p.tau, 1.0 - 2.0 * p.alpha) *
         poisson_dtau(f, t, p, rel_tol);
}

double dleft_frac(const funcspace::TestFunction& f, double t, double alpha,
                  double rel_tol) {
  if (!std::isfinite(alpha) || !(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("dleft_frac: alpha must lie in (0,1)");
  if (!f.smooth())
    throw std::invalid_argument(
        "dleft_frac: integral requires a smooth function");
  if (f.kind() == funcspace::TestFunction::Kind::constant) return 0.0;

  // Smooth bump: compact support [lo, hi].
  const double gamma_neg = std::tgamma(1.0 - alpha) / (-alpha);  // Gamma(-a)
  const double ft = f(t);
  const double reach = t - f.support_lo();
  if (reach <= 0.0) return 0.0;  // f and all its past values vanish

  quad::QuadConfig cfg;
  cfg.rel_tol = rel_tol;
  for (double x : f.feature_points(t - reach, t)) {
    const double s = t - x;
    if (s > 0.0 && s < reach) cfg.split_points.push_back(s);
  }
  auto fn = [&](double s) {
    return (f(t - s) - ft) * std::pow(s, -1.0 - alpha);
  };
  const double body = quad::integrate_interval(fn, 0.0, reach, cfg).value;
  // Past the support, f(t-s) = 0 exactly: the remainder integrates in
  // closed form.
  const double tail = -ft * std::pow(reach, -alpha) / alpha;
  return (body + tail) / gamma_neg;
}

ExtensionTerms extension_terms(const funcspace::TestFunction& f, double t,
                               const PoissonParams& p, double h_tau,
                               double rel_tol) {
  p.validate();
  if (!std::isfinite(h_tau) || !(h_tau > 0.0) || !(h_tau < p.tau))
    throw std::invalid_argument("extension_terms: need 0 < h_tau < tau");
  const double h_t = h_tau * h_tau;  // matched steps: both errors O(h_tau^2)

  const double u00 = poisson_apply(f, t, p, rel_tol);
  const double u10 = poisson_apply(f, t + h_t, p, rel_tol);
  PoissonParams up_p = p;
  up_p.tau = p.tau + h_tau;
  PoissonParams dn_p = p;
  dn_p.tau = p.tau - h_tau;
  const double up = poisson_apply(f, t, up_p, rel_tol);
  const double dn = poisson_apply(f, t, dn_p, rel_tol);

  ExtensionTerms out;
  out.transport = -(u10 - u00) / h_t;
  out.drift = (1.0 - 2.0 * p.alpha) / p.tau * (up - dn) / (2.0 * h_tau);
  out.second = (up - 2.0 * u00 + dn) / (h_tau * h_tau);
  return out;
}

}  // namespace fraclab::poisson
