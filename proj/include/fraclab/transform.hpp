#pragma once
// Differential transforms of the Poisson semigroup along a lacunary sequence:
//
//   T_N f(t) = sum_{j=N1}^{N2} v_j (P_{a_{j+1}} f(t) - P_{a_j} f(t)),
//
// the truncated maximal transform T*_M f = max over windows -M<=N1<N2<=M of
// |T_N f|, and the Cotlar-type quotient
//
//   T*_M f / ( m_minus(|T_{(-M,M)} f|) + m_minus_q(f) ),
//
// whose boundedness is the quantitative content of the maximal-control
// estimate this laboratory probes.
//
// Two independent evaluation paths are kept for cross-validation: summing
// Poisson differences height by height (poisson_diff) and convolving f
// against the closed-form window kernel (kernel_conv).  They must agree to
// quadrature tolerance.

#include <stdexcept>
#include <vector>

#include "fraclab/lacunary.hpp"
#include "fraclab/test_function.hpp"

namespace fraclab::transform {

struct WindowPair {
  int n1 = 0;
  int n2 = 1;
};

enum class Path { poisson_diff, kernel_conv };

// One window at one point.  Requires j_min <= n1 < n2 <= j_max - 1.
double transform_apply(const funcspace::TestFunction& f,
                       const lacunary::LacunarySpec& spec, double alpha,
                       WindowPair window, double t, Path path,
                       double rel_tol = 1e-9);

// Per-layer differences d_j(t_i) = P_{a_{j+1}} f(t_i) - P_{a_j} f(t_i) on a
// grid; every truncated transform over the spec is a weighted partial sum of
// these, so the field is computed once and reused.
struct LayerField {
  funcspace::Grid grid;
  lacunary::LacunarySpec spec;
  double alpha = 0.5;
  std::vector<std::vector<double>> layers;  // [j - j_min][point]
};

LayerField layer_field(const funcspace::TestFunction& f,
                       const lacunary::LacunarySpec& spec, double alpha,
                       const funcspace::Grid& grid, double rel_tol = 1e-9);

// All windows -m <= n1 < n2 <= m plus the pointwise maximum of |T_N f|.
struct TransformField {
  funcspace::Grid grid;
  int m = 0;
  std::vector<WindowPair> windows;
  std::vector<std::vector<double>> values;  // [window][point]
  std::vector<double> tstar;                // max_N |T_N f(t_i)|
};

// Requires the field's spec to cover indices [-m, m+1].
TransformField windows_from_layers(const LayerField& field, int m);

TransformField maximal_truncated(const funcspace::TestFunction& f,
                                 const lacunary::LacunarySpec& spec,
                                 double alpha, int m,
                                 const funcspace::Grid& grid,
                                 double rel_tol = 1e-9);

// T*_m f(t) at a single point, by one Poisson ladder and prefix sums.
double tstar_point(const funcspace::TestFunction& f,
                   const lacunary::LacunarySpec& spec, double alpha, int m,
                   double t, double rel_tol = 1e-9);

// Raised when more than half of the grid has a vanishing denominator.
class DegenerateDenominator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CotlarResult {
  double constant = 0.0;  // max of the quotient over included points
  int excluded = 0;       // points dropped for denominator < 1e-12
  int total = 0;
};

CotlarResult cotlar_ratio(const funcspace::TestFunction& f,
                          const lacunary::LacunarySpec& spec, double alpha,
                          double q, int m, const funcspace::Grid& grid,
                          double rel_tol = 1e-9);

// Same quotient from a precomputed layer field, so one field serves several
// truncation levels m.
CotlarResult cotlar_from_field(const LayerField& field,
                               const funcspace::TestFunction& f, double q,
                               int m);

}  // namespace fraclab::transform
