#pragma once
// Experiment runners.  Each one reproduces a quantitative claim of the
// laboratory at desk scale and returns a report: parameter echo, summary
// metrics, and named pass/fail verdicts whose names carry the acceptance
// criterion they support (c1..c10).  When cfg.out_dir is set, every runner
// also writes its sweep as CSV so each verdict can be recomputed from the
// artifacts alone.
//
//   run_divergence   alternating both-sided shells: window sums at the
//                    origin grow exactly linearly in window length, the
//                    v == +1 control stays bounded, and the growth persists
//                    off the origin.
//   run_growth       unit-interval shells: the local mean of the maximal
//                    transform over (-r, r) scales like (log(2/r))^theta;
//                    three variants pin theta from above (ell^p weights),
//                    from below (slowly decaying weights), and at theta = 1.
//   run_convergence  bounded windows on compactly supported data form a
//                    Cauchy ladder; tail contributions decay geometrically
//                    in the window edges.
//   run_norm_sweep   L^p(w), weak-(1,1), and BMO quotients of the maximal
//                    transform against the data, stable in the truncation.
//   run_kernel_bounds   sup_s s|K| and sup_s s^2|K'| stable across windows.
//   run_multiplier   sup over frequencies of the window multiplier stable
//                    across windows; modulus and telescoping sanity.
//   run_cotlar       the maximal-control quotient is finite and stable in
//                    both truncation and grid refinement.
//   run_weights      one-sided A1/Ap checks: decreasing exponential passes,
//                    increasing exponential fails (negative control).
//   run_lemma21      the two sides of the Laplace contour identity agree.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fraclab::lab {

struct LabConfig {
  double alpha = 0.5;
  double a = 0.0;  // geometric base; 0 = scan (shell runs) or 2 (others)
  double rho = 2.0;
  int M = 8;       // window truncation
  double p = 2.0;
  double q = 2.0;
  double eps = 0.5;
  double grid_lo = -8.0;
  double grid_hi = 8.0;
  double grid_step = 0.0625;
  double rel_tol = 1e-8;
  std::string out_dir;  // empty = no CSV artifacts
};

struct ExperimentReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::string> artifacts;  // CSV paths written

  bool pass() const;
  std::string text() const;
};

// A parameter scan (shell base a, localization radius eta0) ran out of its
// sanctioned range; signals a computation bug, not mathematics.
class ScanExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fewer than 4 radii survived preconditions, so no exponent fit is made.
class FitDegenerate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GrowthVariant { upper_a, lower_b, lower_c };

ExperimentReport run_divergence(const LabConfig& cfg);
ExperimentReport run_growth(const LabConfig& cfg, GrowthVariant variant);
ExperimentReport run_convergence(const LabConfig& cfg);
ExperimentReport run_norm_sweep(const LabConfig& cfg);
ExperimentReport run_kernel_bounds(const LabConfig& cfg);
ExperimentReport run_multiplier(const LabConfig& cfg);
ExperimentReport run_cotlar(const LabConfig& cfg);
ExperimentReport run_weights(const LabConfig& cfg);
ExperimentReport run_lemma21(const LabConfig& cfg);

}  // namespace fraclab::lab
