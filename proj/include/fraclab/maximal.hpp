#pragma once
// One-sided Hardy-Littlewood maximal operators on grid samples, plus the
// one-sided weight condition checkers built from them.
//
//   m_minus f(t) = sup_eps (1/eps) int_{t-eps}^{t} |f|      (looks left)
//   m_plus  f(t) = sup_eps (1/eps) int_{t}^{t+eps} |f|      (looks right)
//   m_minus_q    = the q-th power variant (1/eps int |f|^q)^{1/q}
//
// Samples are extended piecewise-constantly on left-closed cells and by zero
// outside the grid, so every window integral is exact (prefix sums + partial
// end cells).  The sup runs over a geometric epsilon grid.
//
// Weight checks:
//   check_a1_minus: w is one-sided A1 iff m_plus(w) <= C w; reports the best
//     C over the grid plus stability probes (halved window range, refined
//     epsilon density).  pass = both probes move C by less than 5%.
//   check_ap_minus: the one-sided A_p functional over triples
//     (t-h1, t, t+h2) with dyadic gaps,
//       sup (int_{t-h1}^{t} w^{1-p'})^{1/p'} (int_{t}^{t+h2} w)^{1/p} / (h1+h2);
//     same stability probes.  Unbounded weights (e.g. e^{t}) keep growing as
//     the window range doubles and therefore fail the stability gate.

#include <cstddef>
#include <vector>

#include "fraclab/test_function.hpp"

namespace fraclab::maximal {

// eps = step * 2^{k/4}, k = 0,1,..., capped at span (kept when within 1 ulp).
// Requires 0 < step <= span.
std::vector<double> geometric_eps_grid(double step, double span);

// Maximal values at one grid point; fv holds cell values on grid.
double m_minus(const std::vector<double>& fv, const funcspace::Grid& grid,
               int t_index, const std::vector<double>& eps_grid);
double m_plus(const std::vector<double>& fv, const funcspace::Grid& grid,
              int t_index, const std::vector<double>& eps_grid);
// q > 1 required.
double m_minus_q(const std::vector<double>& fv, const funcspace::Grid& grid,
                 int t_index, const std::vector<double>& eps_grid, double q);

// Per-point profiles; at each t_i the epsilon grid spans [step, t_i - lo]
// (resp. [step, hi - t_i]), i.e. windows stay inside the sampled range.
// Edge points with no admissible window get value 0.
std::vector<double> m_minus_profile(const std::vector<double>& fv,
                                    const funcspace::Grid& grid);
std::vector<double> m_plus_profile(const std::vector<double>& fv,
                                   const funcspace::Grid& grid);
std::vector<double> m_minus_q_profile(const std::vector<double>& fv,
                                      const funcspace::Grid& grid, double q);

struct WeightCheck {
  double constant = 0.0;       // best constant over the full probe range
  double constant_half = 0.0;  // range of windows halved
  double constant_fine = 0.0;  // window density refined
  bool pass = false;           // stable under both probes (5%)
};

// w_values > 0 on the grid.
WeightCheck check_a1_minus(const std::vector<double>& w_values,
                           const funcspace::Grid& grid);
WeightCheck check_ap_minus(const std::vector<double>& w_values,
                           const funcspace::Grid& grid, double p,
                           std::size_t triple_budget = 4000000);

}  // namespace fraclab::maximal
