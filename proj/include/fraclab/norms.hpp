#pragma once
// Discrete norms over grid samples.  All integrals are left-endpoint Riemann
// sums over the count-1 cells of the grid, so indicator masses aligned with
// the grid come out exact.

#include <vector>

#include "fraclab/test_function.hpp"

namespace fraclab::funcspace {

std::vector<double> sample(const TestFunction& f, const Grid& g);

// (sum_cells |f_i|^p w_i step)^(1/p), p >= 1
double lp_weighted_norm(const std::vector<double>& fv, double p,
                        const std::vector<double>& wv, const Grid& g);

// weighted measure of {|f| > lambda} for each lambda (positive, increasing)
std::vector<double> weak_l1_profile(const std::vector<double>& fv,
                                    const std::vector<double>& wv,
                                    const Grid& g,
                                    const std::vector<double>& lambdas);

// sup of mean oscillation over dyadic-length windows (all power-of-two cell
// counts, at aligned and half-shifted positions); O(n log n)
double bmo_seminorm(const std::vector<double>& fv, const Grid& g);

}  // namespace fraclab::funcspace
