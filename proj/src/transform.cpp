#include "fraclab/transform.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fraclab/kernel.hpp"
#include "fraclab/maximal.hpp"
#include "fraclab/norms.hpp"
#include "fraclab/poisson.hpp"
#include "fraclab/quadrature.hpp"

namespace fraclab::transform {
namespace {

constexpr double kTailFrac = 1e-10;  // truncation error per unit sup|f|
constexpr double kDeadCore = 3e-5;   // of a_min^2: kernel below machine zero

double sorted_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](double x, double y) { return std::abs(x) > std::abs(y); });
  double acc = 0.0;
  for (double v : terms) acc += v;
  return acc;
}

// Poisson values of f at heights a_{j0} .. a_{j1} at the point t.
std::vector<double> poisson_ladder(const funcspace::TestFunction& f,
                                   const lacunary::LacunarySpec& spec,
                                   double alpha, int j0, int j1, double t,
                                   double rel_tol) {
  std::vector<double> pv;
  pv.reserve(static_cast<std::size_t>(j1 - j0 + 1));
  for (int j = j0; j <= j1; ++j) {
    poisson::PoissonParams p{alpha, spec.a_at(j)};
    pv.push_back(poisson::poisson_apply(f, t, p, rel_tol));
  }
  return pv;
}

double apply_poisson_diff(const funcspace::TestFunction& f,
                          const lacunary::LacunarySpec& spec, double alpha,
                          WindowPair w, double t, double rel_tol) {
  const auto pv = poisson_ladder(f, spec, alpha, w.n1, w.n2 + 1, t, rel_tol);
  std::vector<double> terms;
  terms.reserve(pv.size() - 1);
  for (int j = w.n1; j <= w.n2; ++j) {
    const auto k = static_cast<std::size_t>(j - w.n1);
    terms.push_back(spec.v_at(j) * (pv[k + 1] - pv[k]));
  }
  return sorted_sum(terms);
}

double apply_kernel_conv(const funcspace::TestFunction& f,
                         const lacunary::LacunarySpec& spec, double alpha,
                         WindowPair w, double t, double rel_tol) {
  const double a_min = spec.a_at(w.n1);
  const double a_max = spec.a_at(w.n2 + 1);
  double weight_mass = 0.0;
  for (int j = w.n1; j <= w.n2; ++j) weight_mass += std::abs(spec.v_at(j));
  // |K(s)| <= (2 sum|v_j|) a_max^(2a) s^(-1-a) / c, so cutting at
  // a_max^2 * cut leaves less than kTailFrac * sup|f| behind.
  const double cut =
      std::pow(alpha * kTailFrac / (2.0 * weight_mass + 1.0), -1.0 / alpha);
  double s_end = std::min(a_max * a_max * cut, 1e300);
  const double lo_f = f.support_lo();
  if (std::isfinite(lo_f)) {
    const double reach = t - lo_f;
    if (reach <= 0.0) return 0.0;
    s_end = std::min(s_end, reach);
  }
  quad::QuadConfig cfg;
  cfg.rel_tol = rel_tol;
  cfg.abs_tol = std::max(1e-12, 1e-9 * f.sup_abs());
  const double hi_f = f.support_hi();
  if (std::isfinite(hi_f) && t - hi_f > 0.0 && t - hi_f < s_end)
    cfg.split_points.push_back(t - hi_f);
  const double dead = kDeadCore * a_min * a_min;
  for (double x : f.feature_points(t - s_end, t - dead)) {
    const double s = t - x;
    if (s > 0.0 && s < s_end) cfg.split_points.push_back(s);
  }
  const double s_star = a_min * a_min / (4.0 * (1.0 + alpha));
  for (double g = 0.01 * s_star; g < s_end && cfg.split_points.size() < 800;
       g *= 10.0)
    cfg.split_points.push_back(g);
  const auto integrand = [&](double s) {
    return kernel::kernel_value(spec, w.n1, w.n2, alpha, s) * f(t - s);
  };
  return quad::integrate_interval(integrand, 0.0, s_end, cfg).value;
}

}  // namespace

double transform_apply(const funcspace::TestFunction& f,
                       const lacunary::LacunarySpec& spec, double alpha,
                       WindowPair window, double t, Path path,
                       double rel_tol) {
  spec.validate();
  spec.check_window(window.n1, window.n2);
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("transform_apply: alpha must be in (0,1)");
  switch (path) {
    case Path::poisson_diff:
      return apply_poisson_diff(f, spec, alpha, window, t, rel_tol);
    case Path::kernel_conv:
      return apply_kernel_conv(f, spec, alpha, window, t, rel_tol);
  }
  throw std::logic_error("transform_apply: unknown path");
}

LayerField layer_field(const funcspace::TestFunction& f,
                       const lacunary::LacunarySpec& spec, double alpha,
                       const funcspace::Grid& grid, double rel_tol) {
  spec.validate();
  grid.validate();
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("layer_field: alpha must be in (0,1)");
  const int heights = spec.size();
  std::vector<std::vector<double>> pv(
      static_cast<std::size_t>(heights),
      std::vector<double>(static_cast<std::size_t>(grid.count)));
  for (int h = 0; h < heights; ++h) {
    poisson::PoissonParams p{alpha, spec.a[static_cast<std::size_t>(h)]};
    for (int i = 0; i < grid.count; ++i)
      pv[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)] =
          poisson::poisson_apply(f, grid.point(i), p, rel_tol);
  }
  LayerField out;
  out.grid = grid;
  out.spec = spec;
  out.alpha = alpha;
  out.layers.assign(static_cast<std::size_t>(heights - 1),
                    std::vector<double>(static_cast<std::size_t>(grid.count)));
  for (int h = 0; h + 1 < heights; ++h)
    for (int i = 0; i < grid.count; ++i)
      out.layers[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)] =
          pv[static_cast<std::size_t>(h) + 1][static_cast<std::size_t>(i)] -
          pv[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)];
  return out;
}

TransformField windows_from_layers(const LayerField& field, int m) {
  if (m < 1)
    throw std::invalid_argument("windows_from_layers: m must be >= 1");
  const auto& spec = field.spec;
  if (spec.j_min > -m || spec.j_max() < m + 1)
    throw std::invalid_argument(
        "windows_from_layers: spec does not cover indices [-m, m+1]");
  const int npts = field.grid.count;
  // S[k][i] = sum of v_j d_j(t_i) over j in [-m, -m+k)
  std::vector<std::vector<double>> S(
      static_cast<std::size_t>(2 * m + 2),
      std::vector<double>(static_cast<std::size_t>(npts), 0.0));
  for (int k = 0; k <= 2 * m; ++k) {
    const int j = -m + k;
    const auto& d = field.layers[static_cast<std::size_t>(j - spec.j_min)];
    const double vj = spec.v_at(j);
    for (int i = 0; i < npts; ++i)
      S[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(i)] =
          S[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] +
          vj * d[static_cast<std::size_t>(i)];
  }
  TransformField out;
  out.grid = field.grid;
  out.m = m;
  out.tstar.assign(static_cast<std::size_t>(npts), 0.0);
  for (int n1 = -m; n1 < m; ++n1) {
    for (int n2 = n1 + 1; n2 <= m; ++n2) {
      out.windows.push_back({n1, n2});
      std::vector<double> vals(static_cast<std::size_t>(npts));
      const auto& top = S[static_cast<std::size_t>(n2 + 1 + m)];
      const auto& bot = S[static_cast<std::size_t>(n1 + m)];
      for (int i = 0; i < npts; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        vals[ii] = top[ii] - bot[ii];
        out.tstar[ii] = std::max(out.tstar[ii], std::abs(vals[ii]));
      }
      out.values.push_back(std::move(vals));
    }
  }
  return out;
}

TransformField maximal_truncated(const funcspace::TestFunction& f,
                                 const lacunary::LacunarySpec& spec,
                                 double alpha, int m,
                                 const funcspace::Grid& grid, double rel_tol) {
  return windows_from_layers(layer_field(f, spec, alpha, grid, rel_tol), m);
}

double tstar_point(const funcspace::TestFunction& f,
                   const lacunary::LacunarySpec& spec, double alpha, int m,
                   double t, double rel_tol) {
  if (m < 1) throw std::invalid_argument("tstar_point: m must be >= 1");
  spec.validate();
  if (spec.j_min > -m || spec.j_max() < m + 1)
    throw std::invalid_argument(
        "tstar_point: spec does not cover indices [-m, m+1]");
  const auto pv = poisson_ladder(f, spec, alpha, -m, m + 1, t, rel_tol);
  // S[k] = sum over j in [-m, -m+k) of v_j (P_{a_{j+1}} - P_{a_j})
  std::vector<double> S(pv.size(), 0.0);
  for (std::size_t k = 0; k + 1 < pv.size(); ++k)
    S[k + 1] = S[k] + spec.v_at(-m + static_cast<int>(k)) * (pv[k + 1] - pv[k]);
  double lo = S[0], hi = S[0], best = 0.0;
  // windows need at least two layers: compare S[k] against S[i], k >= i+2
  for (std::size_t k = 2; k < S.size(); ++k) {
    lo = std::min(lo, S[k - 2]);
    hi = std::max(hi, S[k - 2]);
    best = std::max({best, std::abs(S[k] - lo), std::abs(S[k] - hi)});
  }
  return best;
}

CotlarResult cotlar_ratio(const funcspace::TestFunction& f,
                          const lacunary::LacunarySpec& spec, double alpha,
                          double q, int m, const funcspace::Grid& grid,
                          double rel_tol) {
  return cotlar_from_field(layer_field(f, spec, alpha, grid, rel_tol), f, q,
                           m);
}

CotlarResult cotlar_from_field(const LayerField& lf,
                               const funcspace::TestFunction& f, double q,
                               int m) {
  if (!(q > 1.0))
    throw std::invalid_argument("cotlar_from_field: q must be > 1");
  const funcspace::Grid& grid = lf.grid;
  const auto field = windows_from_layers(lf, m);
  std::size_t full = field.windows.size();
  for (std::size_t w = 0; w < field.windows.size(); ++w)
    if (field.windows[w].n1 == -m && field.windows[w].n2 == m) full = w;
  const auto npts = static_cast<std::size_t>(grid.count);
  std::vector<double> tm_abs(npts);
  for (std::size_t i = 0; i < npts; ++i)
    tm_abs[i] = std::abs(field.values[full][i]);
  const auto den_transform = maximal::m_minus_profile(tm_abs, grid);
  const auto fv = funcspace::sample(f, grid);
  const auto den_data = maximal::m_minus_q_profile(fv, grid, q);
  CotlarResult out;
  out.total = grid.count;
  for (std::size_t i = 0; i < npts; ++i) {
    const double den = den_transform[i] + den_data[i];
    if (den < 1e-12) {
      ++out.excluded;
      continue;
    }
    out.constant = std::max(out.constant, field.tstar[i] / den);
  }
  if (2 * out.excluded > out.total)
    throw DegenerateDenominator(
        "cotlar: denominator vanishes on more than half the grid");
  return out;
}

}  // namespace fraclab::transform
