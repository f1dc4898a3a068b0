#pragma once
// Test functions the operators get applied to.  All of them are cheap to
// evaluate pointwise; the indicator-like ones expose their discontinuities
// through feature_points() so quadratures can split there.

#include <cstddef>
#include <limits>
#include <vector>

namespace fraclab::funcspace {

struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  int count = 2;  // number of sample points, cells = count - 1

  double step() const { return (hi - lo) / (count - 1); }
  double point(int i) const { return lo + i * step(); }
  void validate() const;
};

Grid make_grid(double lo, double hi, double step);

class TestFunction {
 public:
  enum class Kind {
    indicator,      // chi_{(lo, hi]}
    smooth_bump,    // C^inf bump, sup-norm 1, support [c-h, c+h]
    constant,
    shells_both,    // sum_k (-1)^k chi_{(-a^{2k+1}, -a^{2k}]},  k in Z
    shells_unit,    // sum_{k<=0} (-1)^k chi_{(-a^{2k}, -a^{2k-1}]}
    grid_sampled,   // piecewise constant on grid cells, 0 outside
  };

  static TestFunction indicator(double lo, double hi);
  static TestFunction smooth_bump(double center, double halfwidth);
  static TestFunction constant(double value);
  static TestFunction shells_both(double a);
  static TestFunction shells_unit(double a);
  static TestFunction grid_sampled(const Grid& g, std::vector<double> values);

  double operator()(double t) const;
  Kind kind() const { return kind_; }
  bool smooth() const {
    return kind_ == Kind::constant || kind_ == Kind::smooth_bump;
  }
  double sup_abs() const;

  // closed support hull; +-inf when unbounded
  double support_lo() const;
  double support_hi() const;

  // discontinuities and support edges inside [xlo, xhi], ascending.
  // Shell variants enumerate geometrically and respect the cap.
  std::vector<double> feature_points(double xlo, double xhi,
                                     std::size_t cap = 800) const;

 private:
  TestFunction(Kind k, double p0, double p1) : kind_(k), p0_(p0), p1_(p1) {}
  Kind kind_;
  double p0_ = 0.0, p1_ = 0.0;
  Grid grid_{};
  std::vector<double> values_;
};

}  // namespace fraclab::funcspace
