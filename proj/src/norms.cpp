#include "fraclab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fraclab::funcspace {

std::vector<double> sample(const TestFunction& f, const Grid& g) {
  g.validate();
  std::vector<double> v((std::size_t)g.count);
  for (int i = 0; i < g.count; ++i) v[(std::size_t)i] = f(g.point(i));
  return v;
}

static void check_sizes(const std::vector<double>& fv,
                        const std::vector<double>& wv, const Grid& g) {
  g.validate();
  if ((int)fv.size() != g.count || (int)wv.size() != g.count)
    throw std::invalid_argument("norms: sample size != grid count");
}

double lp_weighted_norm(const std::vector<double>& fv, double p,
                        const std::vector<double>& wv, const Grid& g) {
  check_sizes(fv, wv, g);
  if (!(p >= 1.0)) throw std::invalid_argument("lp_weighted_norm: p < 1");
  const double h = g.step();
  double acc = 0.0;
  for (int i = 0; i + 1 < g.count; ++i)
    acc += std::pow(std::abs(fv[(std::size_t)i]), p) * wv[(std::size_t)i] * h;
  return std::pow(acc, 1.0 / p);
}

std::vector<double> weak_l1_profile(const std::vector<double>& fv,
                                    const std::vector<double>& wv,
                                    const Grid& g,
                                    const std::vector<double>& lambdas) {
  check_sizes(fv, wv, g);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0))
      throw std::invalid_argument("weak_l1_profile: lambda <= 0");
    if (i > 0 && !(lambdas[i] > lambdas[i - 1]))
      throw std::invalid_argument("weak_l1_profile: lambdas not increasing");
  }
  const double h = g.step();
  std::vector<double> out(lambdas.size(), 0.0);
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    double m = 0.0;
    for (int i = 0; i + 1 < g.count; ++i)
      if (std::abs(fv[(std::size_t)i]) > lambdas[k]) m += wv[(std::size_t)i] * h;
    out[k] = m;
  }
  return out;
}

double bmo_seminorm(const std::vector<double>& fv, const Grid& g) {
  g.validate();
  if ((int)fv.size() != g.count)
    throw std::invalid_argument("bmo_seminorm: sample size != grid count");
  const int n = g.count - 1;  // cells
  std::vector<double> prefix((std::size_t)n + 1, 0.0);
  for (int i = 0; i < n; ++i)
    prefix[(std::size_t)i + 1] = prefix[(std::size_t)i] + fv[(std::size_t)i];

  double best = 0.0;
  for (int len = 1; len <= n; len *= 2) {
    const int stride = std::max(1, len / 2);
    for (int start = 0; start + len <= n; start += stride) {
      const double mean =
          (prefix[(std::size_t)(start + len)] - prefix[(std::size_t)start]) / len;
      double osc = 0.0;
      for (int i = start; i < start + len; ++i)
        osc += std::abs(fv[(std::size_t)i] - mean);
      best = std::max(best, osc / len);
    }
  }
  return best;
}

}  // namespace fraclab::funcspace
