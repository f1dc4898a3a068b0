#pragma once

#include <complex>
#include <vector>

#include "fraclab/lacunary.hpp"
#include "fraclab/quadrature.hpp"

// Convolution kernels of windowed layer differences, their scale-invariant
// size and smoothness functionals, the Fourier multiplier of one layer, and
// the rotated-ray Laplace identity that controls it.
//
// One layer at height a convolves against
//
//   K_a(s) = (1/c) L(a, s) s^(-1-alpha),  L(a, s) = a^(2a') exp(-a^2/(4s)),
//
// c = 4^a' Gamma(a') with a' = alpha, so a window (n1, n2) with weights v_j
// has kernel
//
//   K(s) = (1/c) sum_j v_j (L(a_{j+1}, s) - L(a_j, s)) s^(-1-alpha).
//
// The size functionals sup_s s|K(s)| and sup_s s^2|K'(s)| are the
// Calderon-Zygmund controls; they stay bounded as the window widens.
//
// The Fourier multiplier of one layer at height a and frequency xi is
// m(a^2 xi) with
//
//   m(x) = (1/Gamma(alpha)) integral_0^inf e^(-r) e^(-ix/(4r)) r^(alpha-1) dr,
//
// evaluated here on the ray r = rho e^(i phi), phi = sign(x) pi/4, where
// both exponential factors decay.  Window multipliers sum the layer
// differences.  The identity behind the multiplier bounds,
//
//   integral_0^inf e^(-z u) e^(-z/u) u^(-alpha) du
//     = z^(1-alpha) integral_0^inf e^(-r) e^(-z^2/r) r^(alpha-2) dr,
//
// holds for Re z > 0, |arg z| <= pi/4; lemma21_check evaluates both sides
// independently (the right side on the ray arg r = arg z).

namespace fraclab::kernel {

// K(s) for the window (n1, n2) of spec.  Terms are accumulated from the
// largest magnitude down, a fixed order that makes results reproducible
// across platforms.
double kernel_value(const lacunary::LacunarySpec& spec, int n1, int n2,
                    double alpha, double s);

// d/ds K(s), in closed form: d/ds [L s^(-1-a)] = L s^(-2-a) (a^2/(4s)-(1+a)).
double kernel_dvalue(const lacunary::LacunarySpec& spec, int n1, int n2,
                     double alpha, double s);

struct KernelBounds {
  double sup_sK = 0.0;    // sup over the grid of s |K(s)|
  double sup_s2dK = 0.0;  // sup over the grid of s^2 |K'(s)|
};

// Scan a geometric grid of s from s_lo to s_hi with per_decade points per
// factor of 10.
KernelBounds bound_sweep(const lacunary::LacunarySpec& spec, int n1, int n2,
                         double alpha, double s_lo, double s_hi,
                         int per_decade);

// m(x) by rotated-ray quadrature; m(0) = 1 exactly, m(-x) = conj(m(x)).
std::complex<double> multiplier_m(double alpha, double x,
                                  double rel_tol = 1e-10);

// m(a_j^2 xi) for every height of spec, aligned with spec.a.
std::vector<std::complex<double>> multiplier_layers(
    const lacunary::LacunarySpec& spec, double alpha, double xi,
    double rel_tol = 1e-10);

// Window multiplier sum_{j=n1}^{n2} v_j (m_{j+1} - m_j) from cached layers,
// accumulated largest magnitude first.
std::complex<double> multiplier_window(const lacunary::LacunarySpec& spec,
                                       const std::vector<std::complex<double>>& layers,
                                       int n1, int n2);

struct LemmaCheck {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double rel_diff;
};

// Evaluate both sides of the Laplace identity at z0.  Throws
// std::domain_error outside the sector Re z0 > 0, |arg z0| <= pi/4 (a hair
// of tolerance admits the boundary ray).
LemmaCheck lemma21_check(double alpha, std::complex<double> z0,
                         double rel_tol = 1e-9);

}  // namespace fraclab::kernel
