#include "fraclab/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

namespace fraclab::quad {
namespace {

// 15-point Kronrod abscissae (positive half, descending) with their weights.
// The embedded 7-point Gauss rule lives on the odd-index abscissae; its
// weights are kWg.  Standard double precision constants.
const double kXgk[8] = {0.991455371120813, 0.949107912342759,
                        0.864864423359769, 0.741531185599394,
                        0.586087235467691, 0.405845151377397,
                        0.207784955007898, 0.000000000000000};
const double kWgk[8] = {0.022935322010529, 0.063092092629979,
                        0.104790010322250, 0.140653259715525,
                        0.169004726639267, 0.190350578064785,
                        0.204432940075298, 0.209482141084728};
const double kWg[4] = {0.129484966168870, 0.279705391489277,
                       0.381830050505119, 0.417959183673469};

bool finite_value(double x) { return std::isfinite(x); }
bool finite_value(const std::complex<double>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <typename V>
struct Panel {
  int piece;
  double a, b;
  V value;
  double err;
};

template <typename V>
using PieceFn = std::function<V(double)>;

template <typename V>
Panel<V> eval_panel(const PieceFn<V>& f, int piece, double a, double b,
                    long& evals) {
  const double mid = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  V resk{};
  V resg{};
  for (int i = 0; i < 8; ++i) {
    V fsum{};
    if (i == 7) {
      fsum = f(mid);
      evals += 1;
    } else {
      const double dx = h * kXgk[i];
      fsum = f(mid - dx) + f(mid + dx);
      evals += 2;
    }
    if (!finite_value(fsum))
      throw EvaluationError("integrand not finite near x = " +
                            std::to_string(mid));
    resk += kWgk[i] * fsum;
    if (i % 2 == 1)
      resg += kWg[(i - 1) / 2] * fsum;
    else if (i == 7)
      resg += kWg[3] * fsum;
  }
  Panel<V> p;
  p.piece = piece;
  p.a = a;
  p.b = b;
  p.value = h * resk;
  p.err = std::abs(h * (resk - resg));
  return p;
}

// Worst-panel-first refinement over a set of independent pieces sharing one
// error budget.  Deterministic: ties broken by insertion order.
template <typename V>
std::tuple<V, double, long> refine(
    const std::vector<PieceFn<V>>& fns,
    const std::vector<std::tuple<int, double, double>>& init,
    const QuadConfig& cfg) {
  struct Key {
    double err;
    long seq;
    std::size_t idx;
    bool operator<(const Key& o) const {
      return err != o.err ? err < o.err : seq > o.seq;
    }
  };
  std::vector<Panel<V>> panels;
  std::priority_queue<Key> heap;
  long evals = 0, seq = 0;
  V total{};
  double total_err = 0.0;

  auto push = [&](Panel<V> p) {
    total += p.value;
    total_err += p.err;
    panels.push_back(p);
    heap.push(Key{p.err, seq++, panels.size() - 1});
  };

  for (const auto& [piece, a, b] : init) {
    if (!(b > a)) continue;
    push(eval_panel(fns[piece], piece, a, b, evals));
  }

  int splits = 0;
  double frozen = 0.0;  // error stuck in panels too thin to bisect
  while (true) {
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    if (total_err <= tol) break;
    if (heap.empty())
      throw NonConvergence("error " + std::to_string(total_err) +
                           " above tolerance with no splittable panel left");
    if (splits >= cfg.max_subdivisions)
      throw NonConvergence("subdivision budget exhausted, error " +
                           std::to_string(total_err));
    const Key top = heap.top();
    heap.pop();
    const Panel<V> p = panels[top.idx];
    const double width = p.b - p.a;
    if (width < 8.0 * DBL_EPSILON * std::max({std::abs(p.a), std::abs(p.b)}) ||
        width < 1e-305) {
      frozen += p.err;
      if (frozen > tol)
        throw NonConvergence("unresolvable panel near x = " +
                             std::to_string(p.a));
      continue;
    }
    total -= p.value;
    total_err -= p.err;
    ++splits;
    const double mid = 0.5 * (p.a + p.b);
    push(eval_panel(fns[p.piece], p.piece, p.a, mid, evals));
    push(eval_panel(fns[p.piece], p.piece, mid, p.b, evals));
  }
  return {total, total_err, evals};
}

std::vector<double> prepare_splits(const std::vector<double>& pts, double lo,
                                   double hi) {
  std::vector<double> s;
  for (double x : pts)
    if (x > lo && x < hi && std::isfinite(x)) s.push_back(x);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end(),
                      [](double a, double b) {
                        return b - a <= 4.0 * DBL_EPSILON * std::abs(b);
                      }),
          s.end());
  return s;
}

template <typename V>
std::tuple<V, double, long> interval_impl(const PieceFn<V>& f, double lo,
                                          double hi, const QuadConfig& cfg) {
  if (!(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("integrate_interval: bad bounds");
  if (hi == lo) return {V{}, 0.0, 0};
  const auto cuts = prepare_splits(cfg.split_points, lo, hi);
  std::vector<PieceFn<V>> fns;
  std::vector<std::tuple<int, double, double>> init;
  double left = lo;
  bool substitute_origin = (lo == 0.0);
  std::vector<double> edges(cuts);
  edges.push_back(hi);
  for (double right : edges) {
    if (substitute_origin) {
      // s = u^2 softens an s^-beta endpoint singularity, beta < 1
      fns.push_back([&f](double u) { return 2.0 * u * f(u * u); });
      init.emplace_back((int)fns.size() - 1, 0.0, std::sqrt(right));
      substitute_origin = false;
    } else {
      fns.push_back(f);
      init.emplace_back((int)fns.size() - 1, left, right);
    }
    left = right;
  }
  return refine(fns, init, cfg);
}

template <typename V>
std::tuple<V, double, long> halfline_impl(const PieceFn<V>& f,
                                          const QuadConfig& cfg) {
  auto cuts = prepare_splits(cfg.split_points, 0.0,
                             std::numeric_limits<double>::infinity());
  double pivot = std::max(cfg.pivot, 1e-12);
  if (!cuts.empty()) pivot = std::max(pivot, 2.0 * cuts.back());

  std::vector<PieceFn<V>> fns;
  std::vector<std::tuple<int, double, double>> init;

  // origin piece (0, first]: s = u^2
  const double first = cuts.empty() ? pivot : cuts.front();
  fns.push_back([&f](double u) { return 2.0 * u * f(u * u); });
  init.emplace_back(0, 0.0, std::sqrt(first));

  // interior pieces
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    fns.push_back(f);
    init.emplace_back((int)fns.size() - 1, cuts[i], cuts[i + 1]);
  }
  if (!cuts.empty()) {
    fns.push_back(f);
    init.emplace_back((int)fns.size() - 1, cuts.back(), pivot);
  }

  // tail (pivot, inf): s = 1/u^2
  fns.push_back([&f](double u) { return 2.0 * f(1.0 / (u * u)) / (u * u * u); });
  init.emplace_back((int)fns.size() - 1, 0.0, 1.0 / std::sqrt(pivot));

  return refine(fns, init, cfg);
}

}  // namespace

QuadResult integrate_interval(const RealFn& f, double lo, double hi,
                              const QuadConfig& cfg) {
  auto [v, e, n] = interval_impl<double>(f, lo, hi, cfg);
  return {v, e, n};
}

QuadResult integrate_halfline(const RealFn& f, const QuadConfig& cfg) {
  auto [v, e, n] = halfline_impl<double>(f, cfg);
  return {v, e, n};
}

CQuadResult integrate_interval_c(const ComplexFn& f, double lo, double hi,
                                 const QuadConfig& cfg) {
  auto [v, e, n] = interval_impl<std::complex<double>>(f, lo, hi, cfg);
  return {v, e, n};
}

CQuadResult integrate_halfline_c(const ComplexFn& f, const QuadConfig& cfg) {
  auto [v, e, n] = halfline_impl<std::complex<double>>(f, cfg);
  return {v, e, n};
}

}  // namespace fraclab::quad
