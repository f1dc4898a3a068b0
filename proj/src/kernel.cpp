#include "fraclab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fraclab::kernel {

namespace {

// L(a, s) = a^(2*alpha) exp(-a^2/(4s)) in exp-of-log form.
double layer_factor(double a, double alpha, double s) {
  const double e = 2.0 * alpha * std::log(a) - a * a / (4.0 * s);
  return e < -745.0 ? 0.0 : std::exp(e);
}

// d/ds [L(a,s) s^(-1-alpha)] / s^(-2-alpha) = L(a,s) (a^2/(4s) - (1+alpha)).
double layer_dfactor(double a, double alpha, double s) {
  return layer_factor(a, alpha, s) * (a * a / (4.0 * s) - (1.0 + alpha));
}

// Accumulate the window terms v_j (g(a_{j+1}) - g(a_j)) largest first.
template <typename G>
double window_sum(const lacunary::LacunarySpec& spec, int n1, int n2,
                  const G& g) {
  spec.check_window(n1, n2);
  std::vector<double> terms;
  terms.reserve((std::size_t)(n2 - n1 + 1));
  for (int j = n1; j <= n2; ++j)
    terms.push_back(spec.v_at(j) * (g(spec.a_at(j + 1)) - g(spec.a_at(j))));
  std::sort(terms.begin(), terms.end(),
            [](double x, double y) { return std::abs(x) > std::abs(y); });
  double acc = 0.0;
  for (double t : terms) acc += t;
  return acc;
}

void check_alpha(double alpha) {
  if (!std::isfinite(alpha) || !(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("kernel: alpha must lie in (0,1)");
}

double gamma_alpha_norm(double alpha) {
  return std::pow(4.0, alpha) * std::tgamma(alpha);
}

}  // namespace

double kernel_value(const lacunary::LacunarySpec& spec, int n1, int n2,
                    double alpha, double s) {
  check_alpha(alpha);
  if (!(s > 0.0) || !std::isfinite(s))
    throw std::invalid_argument("kernel_value: s must be positive");
  const double sum = window_sum(
      spec, n1, n2, [&](double a) { return layer_factor(a, alpha, s); });
  return sum * std::exp(-(1.0 + alpha) * std::log(s)) / gamma_alpha_norm(alpha);
}

double kernel_dvalue(const lacunary::LacunarySpec& spec, int n1, int n2,
                     double alpha, double s) {
  check_alpha(alpha);
  if (!(s > 0.0) || !std::isfinite(s))
    throw std::invalid_argument("kernel_dvalue: s must be positive");
  const double sum = window_sum(
      spec, n1, n2, [&](double a) { return layer_dfactor(a, alpha, s); });
  return sum * std::exp(-(2.0 + alpha) * std::log(s)) / gamma_alpha_norm(alpha);
}

KernelBounds bound_sweep(const lacunary::LacunarySpec& spec, int n1, int n2,
                         double alpha, double s_lo, double s_hi,
                         int per_decade) {
  check_alpha(alpha);
  if (!(s_lo > 0.0) || !(s_hi > s_lo) || per_decade < 1)
    throw std::invalid_argument("bound_sweep: bad grid");
  KernelBounds out;
  const double ratio = std::pow(10.0, 1.0 / per_decade);
  for (double s = s_lo; s <= s_hi * (1.0 + 1e-12); s *= ratio) {
    out.sup_sK = std::max(out.sup_sK,
                          s * std::abs(kernel_value(spec, n1, n2, alpha, s)));
    out.sup_s2dK = std::max(
        out.sup_s2dK, s * s * std::abs(kernel_dvalue(spec, n1, n2, alpha, s)));
  }
  return out;
}

std::complex<double> multiplier_m(double alpha, double x, double rel_tol) {
  check_alpha(alpha);
  if (!std::isfinite(x)) throw std::invalid_argument("multiplier_m: bad x");
  if (x == 0.0) return {1.0, 0.0};

  const double phi = (x > 0.0 ? 1.0 : -1.0) * std::numbers::pi / 4.0;
  const std::complex<double> e_phi = std::polar(1.0, phi);
  // i x e^(-i phi) / 4: coefficient of the 1/rho term after rotation.
  const std::complex<double> c2 =
      std::complex<double>(0.0, x / 4.0) * std::polar(1.0, -phi);

  quad::QuadConfig cfg;
  cfg.rel_tol = rel_tol;
  const double s0 = 0.5 * std::sqrt(std::abs(x));  // stationary scale
  cfg.split_points = {0.1 * s0, s0, 10.0 * s0, 1.0};

  auto fn = [&](double rho) {
    const std::complex<double> e = -rho * e_phi - c2 / rho;
    if (e.real() < -745.0) return std::complex<double>(0.0, 0.0);
    return std::exp(e) * std::pow(rho, alpha - 1.0);
  };
  const std::complex<double> integral = quad::integrate_halfline_c(fn, cfg).value;
  return std::polar(1.0, phi * alpha) * integral / std::tgamma(alpha);
}

std::vector<std::complex<double>> multiplier_layers(
    const lacunary::LacunarySpec& spec, double alpha, double xi,
    double rel_tol) {
  spec.validate();
  std::vector<std::complex<double>> out;
  out.reserve(spec.a.size());
  for (double a : spec.a) out.push_back(multiplier_m(alpha, a * a * xi, rel_tol));
  return out;
}

std::complex<double> multiplier_window(
    const lacunary::LacunarySpec& spec,
    const std::vector<std::complex<double>>& layers, int n1, int n2) {
  spec.check_window(n1, n2);
  if (layers.size() != spec.a.size())
    throw std::invalid_argument("multiplier_window: layer cache size");
  std::vector<std::complex<double>> terms;
  terms.reserve((std::size_t)(n2 - n1 + 1));
  for (int j = n1; j <= n2; ++j) {
    const std::size_t i = (std::size_t)(j - spec.j_min);
    terms.push_back(spec.v_at(j) * (layers[i + 1] - layers[i]));
  }
  std::sort(terms.begin(), terms.end(),
            [](const std::complex<double>& u, const std::complex<double>& v) {
              return std::abs(u) > std::abs(v);
            });
  std::complex<double> acc{0.0, 0.0};
  for (const auto& t : terms) acc += t;
  return acc;
}

LemmaCheck lemma21_check(double alpha, std::complex<double> z0,
                         double rel_tol) {
  check_alpha(alpha);
  const double pi4 = std::numbers::pi / 4.0;
  if (!(z0.real() > 0.0) || std::abs(std::arg(z0)) > pi4 + 1e-9)
    throw std::domain_error(
        "lemma21_check: z0 must satisfy Re z0 > 0, |arg z0| <= pi/4");

  const double az = std::abs(z0);
  quad::QuadConfig cfg;
  cfg.rel_tol = rel_tol;

  // Left side: both exponentials decay on the real ray already.
  cfg.split_points = {0.1, 1.0, 10.0};
  auto lhs_fn = [&](double u) {
    const std::complex<double> e = -z0 * u - z0 / u;
    if (e.real() < -745.0) return std::complex<double>(0.0, 0.0);
    return std::exp(e) * std::pow(u, -alpha);
  };
  const std::complex<double> lhs = quad::integrate_halfline_c(lhs_fn, cfg).value;

  // Right side on the ray r = rho e^(i psi), psi = arg z0, where both
  // factors decay even on the sector boundary.
  const double psi = std::arg(z0);
  const std::complex<double> e_psi = std::polar(1.0, psi);
  const std::complex<double> z2 = z0 * z0 * std::polar(1.0, -psi);
  quad::QuadConfig cfg2;
  cfg2.rel_tol = rel_tol;
  cfg2.split_points = {0.1 * az, az, 10.0 * az, 1.0};
  auto rhs_fn = [&](double rho) {
    const std::complex<double> e = -rho * e_psi - z2 / rho;
    if (e.real() < -745.0) return std::complex<double>(0.0, 0.0);
    return std::exp(e) * std::pow(rho, alpha - 2.0);
  };
  const std::complex<double> integral = quad::integrate_halfline_c(rhs_fn, cfg2).value;
  const std::complex<double> rhs = std::pow(z0, 1.0 - alpha) *
                                   std::polar(1.0, psi * (alpha - 1.0)) *
                                   integral;

  LemmaCheck out;
  out.lhs = lhs;
  out.rhs = rhs;
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  out.rel_diff = std::abs(lhs - rhs) / scale;
  return out;
}

}  // namespace fraclab::kernel
