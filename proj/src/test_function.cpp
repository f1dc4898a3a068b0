#include "fraclab/test_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fraclab::funcspace {

void Grid::validate() const {
  if (!(hi > lo) || count < 2)
    throw std::invalid_argument("grid: need hi > lo and count >= 2");
}

Grid make_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi > lo))
    throw std::invalid_argument("make_grid: need step > 0 and hi > lo");
  Grid g;
  g.lo = lo;
  g.hi = hi;
  g.count = (int)std::llround((hi - lo) / step) + 1;
  if (g.count < 2) g.count = 2;
  return g;
}

TestFunction TestFunction::indicator(double lo, double hi) {
  if (!(hi > lo)) throw std::invalid_argument("indicator: need hi > lo");
  return TestFunction(Kind::indicator, lo, hi);
}

TestFunction TestFunction::smooth_bump(double center, double halfwidth) {
  if (!(halfwidth > 0.0)) throw std::invalid_argument("smooth_bump: halfwidth");
  return TestFunction(Kind::smooth_bump, center, halfwidth);
}

TestFunction TestFunction::constant(double value) {
  return TestFunction(Kind::constant, value, 0.0);
}

TestFunction TestFunction::shells_both(double a) {
  if (!(a > 1.0)) throw std::invalid_argument("shells: need a > 1");
  return TestFunction(Kind::shells_both, a, 0.0);
}

TestFunction TestFunction::shells_unit(double a) {
  if (!(a > 1.0)) throw std::invalid_argument("shells: need a > 1");
  return TestFunction(Kind::shells_unit, a, 0.0);
}

TestFunction TestFunction::grid_sampled(const Grid& g,
                                        std::vector<double> values) {
  g.validate();
  if ((int)values.size() != g.count)
    throw std::invalid_argument("grid_sampled: values size != grid count");
  TestFunction f(Kind::grid_sampled, 0.0, 0.0);
  f.grid_ = g;
  f.values_ = std::move(values);
  return f;
}

namespace {

// floor(log_a u) with a half-ulp guard band: exact powers of a land on their
// integer exponent instead of one ulp below it.
long shell_floor(double u, double a, bool& on_boundary) {
  const double x = std::log(u) / std::log(a);
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-12 * std::max(1.0, std::abs(x))) {
    on_boundary = true;
    return (long)r;
  }
  on_boundary = false;
  return (long)std::floor(x);
}

}  // namespace

double TestFunction::operator()(double t) const {
  switch (kind_) {
    case Kind::indicator:
      return (t > p0_ && t <= p1_) ? 1.0 : 0.0;
    case Kind::smooth_bump: {
      const double u = (t - p0_) / p1_;
      if (std::abs(u) >= 1.0) return 0.0;
      return std::exp(1.0 - 1.0 / (1.0 - u * u));
    }
    case Kind::constant:
      return p0_;
    case Kind::shells_both: {
      // value (-1)^k on u = -t in [a^{2k}, a^{2k+1}), i.e. t in (-a^{2k+1}, -a^{2k}]
      if (t >= 0.0) return 0.0;
      bool exact = false;
      const long fl = shell_floor(-t, p0_, exact);
      if (fl % 2 != 0) return 0.0;  // gaps have odd floor
      const long k = fl / 2;
      return (k % 2 == 0) ? 1.0 : -1.0;
    }
    case Kind::shells_unit: {
      // value (-1)^k on u = -t in [a^{2k-1}, a^{2k}), k <= 0
      if (t >= 0.0 || t < -1.0) return 0.0;
      bool exact = false;
      const long fl = shell_floor(-t, p0_, exact);
      if (fl % 2 == 0) return 0.0;  // u = a^even is a gap (or u = 1, excluded)
      const long k = (fl + 1) / 2;
      if (k > 0) return 0.0;
      return (k % 2 == 0) ? 1.0 : -1.0;
    }
    case Kind::grid_sampled: {
      if (t < grid_.lo || t > grid_.hi) return 0.0;
      int i = (int)std::floor((t - grid_.lo) / grid_.step());
      i = std::clamp(i, 0, grid_.count - 1);
      return values_[i];
    }
  }
  return 0.0;
}

double TestFunction::sup_abs() const {
  switch (kind_) {
    case Kind::indicator:
    case Kind::smooth_bump:
    case Kind::shells_both:
    case Kind::shells_unit:
      return 1.0;
    case Kind::constant:
      return std::abs(p0_);
    case Kind::grid_sampled: {
      double m = 0.0;
      for (double v : values_) m = std::max(m, std::abs(v));
      return m;
    }
  }
  return 0.0;
}

double TestFunction::support_lo() const {
  switch (kind_) {
    case Kind::indicator:
      return p0_;
    case Kind::smooth_bump:
      return p0_ - p1_;
    case Kind::constant:
      return p0_ == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    case Kind::shells_both:
      return -std::numeric_limits<double>::infinity();
    case Kind::shells_unit:
      return -1.0;
    case Kind::grid_sampled:
      return grid_.lo;
  }
  return 0.0;
}

double TestFunction::support_hi() const {
  switch (kind_) {
    case Kind::indicator:
      return p1_;
    case Kind::smooth_bump:
      return p0_ + p1_;
    case Kind::constant:
      return p0_ == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    case Kind::shells_both:
    case Kind::shells_unit:
      return 0.0;
    case Kind::grid_sampled:
      return grid_.hi;
  }
  return 0.0;
}

std::vector<double> TestFunction::feature_points(double xlo, double xhi,
                                                 std::size_t cap) const {
  std::vector<double> pts;
  auto add = [&](double x) {
    if (x >= xlo && x <= xhi && pts.size() < cap) pts.push_back(x);
  };
  switch (kind_) {
    case Kind::indicator:
      add(p0_);
      add(p1_);
      break;
    case Kind::smooth_bump:
      add(p0_ - p1_);
      add(p0_);
      add(p0_ + p1_);
      break;
    case Kind::constant:
      break;
    case Kind::shells_both:
    case Kind::shells_unit: {
      // boundaries at t = -a^m; relevant m solve xlo <= -a^m <= xhi
      if (xhi < 0.0 || xlo < 0.0) {
        const double a = p0_;
        const double la = std::log(a);
        const double u_hi = -xlo;
        // The relative floor only guards against absurd windows; clustered
        // boundaries collapse downstream (duplicate splits are deduped).
        const double u_lo = std::max({-xhi, 1e-300, u_hi * 1e-290});
        if (u_hi > 0.0) {
          long m0 = (long)std::floor(std::log(u_lo) / la) - 1;
          long m1 = (long)std::ceil(std::log(u_hi) / la) + 1;
          if (kind_ == Kind::shells_unit) m1 = std::min(m1, (long)0);
          for (long m = m1; m >= m0 && pts.size() < cap; --m) add(-std::pow(a, (double)m));
        }
      }
      if (kind_ == Kind::shells_unit) add(-1.0);
      break;
    }
    case Kind::grid_sampled:
      for (int i = 0; i < grid_.count && pts.size() < cap; ++i)
        add(grid_.point(i));
      break;
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace fraclab::funcspace
