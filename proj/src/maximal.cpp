#include "fraclab/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fraclab::maximal {
namespace {

// Prefix integrals of |f|^q over whole cells: pre[i] = int_{lo}^{t_i} |f|^q.
std::vector<double> prefix_abs_pow(const std::vector<double>& fv,
                                   const funcspace::Grid& grid, double q) {
  const double h = grid.step();
  std::vector<double> pre(static_cast<std::size_t>(grid.count), 0.0);
  for (int i = 0; i + 1 < grid.count; ++i) {
    const double cell =
        (q == 1.0) ? std::abs(fv[static_cast<std::size_t>(i)])
                   : std::pow(std::abs(fv[static_cast<std::size_t>(i)]), q);
    pre[static_cast<std::size_t>(i) + 1] = pre[static_cast<std::size_t>(i)] + cell * h;
  }
  return pre;
}

// int_{a}^{b} |f|^q with f piecewise constant on cells, zero outside.
double window_integral(const std::vector<double>& pre,
                       const std::vector<double>& fv,
                       const funcspace::Grid& grid, double q, double a,
                       double b) {
  const double lo = grid.lo, hi = grid.hi, h = grid.step();
  a = std::max(a, lo);
  b = std::min(b, hi);
  if (b <= a) return 0.0;
  const int n = grid.count - 1;  // cells
  const auto cell_pow = [&](int c) {
    const double v = std::abs(fv[static_cast<std::size_t>(c)]);
    return (q == 1.0) ? v : std::pow(v, q);
  };
  int ia = std::clamp(static_cast<int>(std::floor((a - lo) / h)), 0, n - 1);
  int ib = std::clamp(static_cast<int>(std::floor((b - lo) / h)), 0, n - 1);
  // snap to the cell actually containing the point (floating floor can be off
  // by one at cell boundaries)
  while (ia > 0 && a < lo + ia * h) --ia;
  while (ia < n - 1 && a >= lo + (ia + 1) * h) ++ia;
  while (ib > 0 && b <= lo + ib * h) --ib;
  while (ib < n - 1 && b > lo + (ib + 1) * h) ++ib;
  if (ia == ib) return cell_pow(ia) * (b - a);
  double total = cell_pow(ia) * (lo + (ia + 1) * h - a);
  total += pre[static_cast<std::size_t>(ib)] - pre[static_cast<std::size_t>(ia) + 1];
  total += cell_pow(ib) * (b - (lo + ib * h));
  return total;
}

double maximal_at(const std::vector<double>& fv, const funcspace::Grid& grid,
                  int t_index, const std::vector<double>& eps_grid, double q,
                  bool left) {
  grid.validate();
  if (t_index < 0 || t_index >= grid.count)
    throw std::out_of_range("maximal: t_index outside grid");
  if (fv.size() != static_cast<std::size_t>(grid.count))
    throw std::invalid_argument("maximal: sample size mismatch");
  const auto pre = prefix_abs_pow(fv, grid, q);
  const double t = grid.point(t_index);
  double best = 0.0;
  for (double eps : eps_grid) {
    if (!(eps > 0.0)) throw std::invalid_argument("maximal: eps must be > 0");
    const double a = left ? t - eps : t;
    const double b = left ? t : t + eps;
    const double avg = window_integral(pre, fv, grid, q, a, b) / eps;
    best = std::max(best, avg);
  }
  return (q == 1.0) ? best : std::pow(best, 1.0 / q);
}

std::vector<double> profile(const std::vector<double>& fv,
                            const funcspace::Grid& grid, double q, bool left) {
  grid.validate();
  if (fv.size() != static_cast<std::size_t>(grid.count))
    throw std::invalid_argument("maximal: sample size mismatch");
  const auto pre = prefix_abs_pow(fv, grid, q);
  const double h = grid.step();
  std::vector<double> out(static_cast<std::size_t>(grid.count), 0.0);
  for (int i = 0; i < grid.count; ++i) {
    const double t = grid.point(i);
    const double span = left ? t - grid.lo : grid.hi - t;
    if (span < h * (1.0 - 1e-12)) continue;  // no admissible window
    double best = 0.0;
    for (double eps : geometric_eps_grid(h, span)) {
      const double a = left ? t - eps : t;
      const double b = left ? t : t + eps;
      best = std::max(best, window_integral(pre, fv, grid, q, a, b) / eps);
    }
    out[static_cast<std::size_t>(i)] = (q == 1.0) ? best : std::pow(best, 1.0 / q);
  }
  return out;
}

}  // namespace

std::vector<double> geometric_eps_grid(double step, double span) {
  if (!(step > 0.0) || !(span >= step * (1.0 - 1e-12)))
    throw std::invalid_argument("geometric_eps_grid: need 0 < step <= span");
  std::vector<double> eps;
  for (int k = 0;; ++k) {
    const double e = step * std::pow(2.0, 0.25 * k);
    if (e > span * (1.0 + 1e-12)) break;
    eps.push_back(std::min(e, span));
  }
  if (eps.empty() || eps.back() < span * (1.0 - 1e-12)) eps.push_back(span);
  return eps;
}

double m_minus(const std::vector<double>& fv, const funcspace::Grid& grid,
               int t_index, const std::vector<double>& eps_grid) {
  return maximal_at(fv, grid, t_index, eps_grid, 1.0, true);
}

double m_plus(const std::vector<double>& fv, const funcspace::Grid& grid,
              int t_index, const std::vector<double>& eps_grid) {
  return maximal_at(fv, grid, t_index, eps_grid, 1.0, false);
}

double m_minus_q(const std::vector<double>& fv, const funcspace::Grid& grid,
                 int t_index, const std::vector<double>& eps_grid, double q) {
  if (!(q > 1.0)) throw std::invalid_argument("m_minus_q: q must be > 1");
  return maximal_at(fv, grid, t_index, eps_grid, q, true);
}

std::vector<double> m_minus_profile(const std::vector<double>& fv,
                                    const funcspace::Grid& grid) {
  return profile(fv, grid, 1.0, true);
}

std::vector<double> m_plus_profile(const std::vector<double>& fv,
                                   const funcspace::Grid& grid) {
  return profile(fv, grid, 1.0, false);
}

std::vector<double> m_minus_q_profile(const std::vector<double>& fv,
                                      const funcspace::Grid& grid, double q) {
  if (!(q > 1.0)) throw std::invalid_argument("m_minus_q_profile: q must be > 1");
  return profile(fv, grid, q, true);
}

namespace {

// Best A1 constant sup_t m_plus(w)(t)/w(t) with the eps range capped at
// span_cap and the eps density set by quarter- or eighth-octave steps.
double a1_constant(const std::vector<double>& w,
                   const funcspace::Grid& grid, double span_frac,
                   double density_exponent) {
  const auto pre = prefix_abs_pow(w, grid, 1.0);
  const double h = grid.step();
  double best = 0.0;
  for (int i = 0; i < grid.count; ++i) {
    const double t = grid.point(i);
    const double span = (grid.hi - t) * span_frac;
    if (span < h * (1.0 - 1e-12)) continue;
    double mplus = 0.0;
    for (int k = 0;; ++k) {
      const double eps = h * std::pow(2.0, density_exponent * k);
      if (eps > span * (1.0 + 1e-12)) break;
      mplus = std::max(mplus,
                       window_integral(pre, w, grid, 1.0, t, t + eps) / eps);
    }
    best = std::max(best, mplus / w[static_cast<std::size_t>(i)]);
  }
  return best;
}

}  // namespace

WeightCheck check_a1_minus(const std::vector<double>& w_values,
                           const funcspace::Grid& grid) {
  grid.validate();
  if (w_values.size() != static_cast<std::size_t>(grid.count))
    throw std::invalid_argument("check_a1_minus: sample size mismatch");
  for (double w : w_values)
    if (!(w > 0.0)) throw std::invalid_argument("check_a1_minus: weight must be positive");
  WeightCheck out;
  out.constant = a1_constant(w_values, grid, 1.0, 0.25);
  out.constant_half = a1_constant(w_values, grid, 0.5, 0.25);
  out.constant_fine = a1_constant(w_values, grid, 1.0, 0.125);
  const bool range_stable = out.constant <= 1.05 * out.constant_half;
  const bool density_stable =
      std::abs(out.constant_fine - out.constant) <= 0.05 * out.constant;
  out.pass = range_stable && density_stable;
  return out;
}

namespace {

// Gap lengths h = step * round(2^{density_exponent*k}) cells, deduplicated,
// capped at max_cells.
std::vector<int> dyadic_gaps(int max_cells, double density_exponent) {
  std::vector<int> gaps;
  for (int k = 0;; ++k) {
    const int m = static_cast<int>(std::llround(std::pow(2.0, density_exponent * k)));
    if (m > max_cells) break;
    if (gaps.empty() || gaps.back() != m) gaps.push_back(m);
  }
  return gaps;
}

// sup over (t, h1, h2) of
//   (int_{t-h1}^{t} w^{1-p'})^{1/p'} (int_{t}^{t+h2} w)^{1/p} / (h1+h2)
double ap_constant(const std::vector<double>& w, const funcspace::Grid& grid,
                   double p, double span_frac, double density_exponent,
                   std::size_t triple_budget) {
  const double pp = p / (p - 1.0);  // conjugate exponent
  const double h = grid.step();
  const int n = grid.count;
  std::vector<double> sigma(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) sigma[i] = std::pow(w[i], 1.0 - pp);
  const auto pre_w = prefix_abs_pow(w, grid, 1.0);
  const auto pre_s = prefix_abs_pow(sigma, grid, 1.0);
  const int max_cells =
      std::max(1, static_cast<int>(std::floor((n - 1) * span_frac)));
  const auto gaps = dyadic_gaps(max_cells, density_exponent);
  const std::size_t per_point = gaps.size() * gaps.size();
  const std::size_t need = static_cast<std::size_t>(n) * per_point;
  const int stride =
      need > triple_budget
          ? static_cast<int>((need + triple_budget - 1) / triple_budget)
          : 1;
  double best = 0.0;
  for (int i = 0; i < n; i += stride) {
    for (int g1 : gaps) {
      if (i - g1 < 0) break;
      const double left =
          pre_s[static_cast<std::size_t>(i)] - pre_s[static_cast<std::size_t>(i - g1)];
      for (int g2 : gaps) {
        if (i + g2 >= n) break;
        const double right =
            pre_w[static_cast<std::size_t>(i + g2)] - pre_w[static_cast<std::size_t>(i)];
        const double val = std::pow(left, 1.0 / pp) * std::pow(right, 1.0 / p) /
                           (h * (g1 + g2));
        best = std::max(best, val);
      }
    }
  }
  return best;
}

}  // namespace

WeightCheck check_ap_minus(const std::vector<double>& w_values,
                           const funcspace::Grid& grid, double p,
                           std::size_t triple_budget) {
  grid.validate();
  if (!(p > 1.0)) throw std::invalid_argument("check_ap_minus: p must be > 1");
  if (w_values.size() != static_cast<std::size_t>(grid.count))
    throw std::invalid_argument("check_ap_minus: sample size mismatch");
  for (double w : w_values)
    if (!(w > 0.0)) throw std::invalid_argument("check_ap_minus: weight must be positive");
  WeightCheck out;
  out.constant = ap_constant(w_values, grid, p, 1.0, 1.0, triple_budget);
  out.constant_half = ap_constant(w_values, grid, p, 0.5, 1.0, triple_budget);
  out.constant_fine = ap_constant(w_values, grid, p, 1.0, 0.5, triple_budget);
  const bool range_stable = out.constant <= 1.05 * out.constant_half;
  const bool density_stable =
      std::abs(out.constant_fine - out.constant) <= 0.05 * out.constant;
  out.pass = range_stable && density_stable;
  return out;
}

}  // namespace fraclab::maximal
