// Command-line driver: one subcommand per experiment, shared parameter
// flags, optional key = value config file (flags override the file), CSV
// artifacts plus report.txt under --out, exit 0 iff every verdict passes.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fraclab/experiments.hpp"

namespace {

using fraclab::lab::ExperimentReport;
using fraclab::lab::GrowthVariant;
using fraclab::lab::LabConfig;

struct Options {
  double alpha = 0.0;
  double a = 0.0;
  double rho = 0.0;
  int M = 0;
  double p = 0.0;
  double q = 0.0;
  double eps = 0.0;
  double grid_lo = 0.0;
  double grid_hi = 0.0;
  double grid_step = 0.0;
  double rel_tol = 0.0;
  std::string out;
  std::string config;
  std::string variant = "all";  // growth only
};

void add_common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--alpha", o.alpha, "fractional order in (0,1)");
  cmd->add_option("--a", o.a, "shell / geometric base (0 = scan or rho)");
  cmd->add_option("--rho", o.rho, "lacunarity ratio for geometric specs");
  cmd->add_option("--M", o.M, "window truncation");
  cmd->add_option("--p", o.p, "Lebesgue / weight exponent");
  cmd->add_option("--q", o.q, "exponent of the data maximal function");
  cmd->add_option("--eps", o.eps, "exponent shift for the lower-b weights");
  cmd->add_option("--grid-lo", o.grid_lo, "grid left endpoint");
  cmd->add_option("--grid-hi", o.grid_hi, "grid right endpoint");
  cmd->add_option("--grid-step", o.grid_step, "grid step");
  cmd->add_option("--rel-tol", o.rel_tol, "quadrature relative tolerance");
  cmd->add_option("--out", o.out, "directory for CSV artifacts + report.txt");
  cmd->add_option("--config", o.config, "key = value file; flags override");
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      const auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    if (strip(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key = value");
    const auto key = strip(line.substr(0, eq));
    const auto val = strip(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": empty key or value");
    kv[key] = val;
  }
  return kv;
}

void apply_config_file(LabConfig& cfg, std::string& variant,
                       const std::map<std::string, std::string>& kv) {
  for (const auto& [key, val] : kv) {
    try {
      if (key == "alpha") cfg.alpha = std::stod(val);
      else if (key == "a") cfg.a = std::stod(val);
      else if (key == "rho") cfg.rho = std::stod(val);
      else if (key == "M") cfg.M = std::stoi(val);
      else if (key == "p") cfg.p = std::stod(val);
      else if (key == "q") cfg.q = std::stod(val);
      else if (key == "eps") cfg.eps = std::stod(val);
      else if (key == "grid-lo") cfg.grid_lo = std::stod(val);
      else if (key == "grid-hi") cfg.grid_hi = std::stod(val);
      else if (key == "grid-step") cfg.grid_step = std::stod(val);
      else if (key == "rel-tol") cfg.rel_tol = std::stod(val);
      else if (key == "out") cfg.out_dir = val;
      else if (key == "variant") variant = val;
      else throw std::runtime_error("config: unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("config: bad value for '" + key + "'");
    }
  }
}

// Per-subcommand defaults, then config file, then explicit flags.
LabConfig resolve(const CLI::App* cmd, const Options& o, LabConfig defaults,
                  std::string& variant) {
  LabConfig cfg = defaults;
  if (cmd->count("--config")) apply_config_file(cfg, variant, read_config(o.config));
  if (cmd->count("--alpha")) cfg.alpha = o.alpha;
  if (cmd->count("--a")) cfg.a = o.a;
  if (cmd->count("--rho")) cfg.rho = o.rho;
  if (cmd->count("--M")) cfg.M = o.M;
  if (cmd->count("--p")) cfg.p = o.p;
  if (cmd->count("--q")) cfg.q = o.q;
  if (cmd->count("--eps")) cfg.eps = o.eps;
  if (cmd->count("--grid-lo")) cfg.grid_lo = o.grid_lo;
  if (cmd->count("--grid-hi")) cfg.grid_hi = o.grid_hi;
  if (cmd->count("--grid-step")) cfg.grid_step = o.grid_step;
  if (cmd->count("--rel-tol")) cfg.rel_tol = o.rel_tol;
  if (cmd->count("--out")) cfg.out_dir = o.out;
  return cfg;
}

LabConfig with(LabConfig cfg, double alpha, int m) {
  cfg.alpha = alpha;
  cfg.M = m;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fraclab: numerical laboratory for differential transforms of the "
      "one-sided fractional Poisson semigroup"};
  app.require_subcommand(1);

  LabConfig base;  // library defaults
  Options opt;

  auto* diverge = app.add_subcommand(
      "diverge", "linear window growth on both-sided alternating shells");
  auto* growth = app.add_subcommand(
      "growth", "local means of T* scale like (log 2/r)^theta");
  auto* converge = app.add_subcommand(
      "converge", "Cauchy window ladder and tail rates on compact data");
  auto* norms = app.add_subcommand(
      "norms", "L^p(w) / weak / BMO quotients of the maximal transform");
  auto* kernel_bounds = app.add_subcommand(
      "kernel-bounds", "sup_s s|K| and sup_s s^2|K'| stability");
  auto* multiplier = app.add_subcommand(
      "multiplier", "uniform bound of the window Fourier multiplier");
  auto* cotlar = app.add_subcommand(
      "cotlar", "maximal-control quotient, truncation + refinement stable");
  auto* weights = app.add_subcommand(
      "weights", "one-sided A1 / Ap certification with negative control");
  auto* lemma21 =
      app.add_subcommand("lemma21", "Laplace contour identity check");
  for (auto* cmd : {diverge, growth, converge, norms, kernel_bounds,
                    multiplier, cotlar, weights, lemma21})
    add_common_flags(cmd, opt);
  growth->add_option("--variant", opt.variant,
                     "a (upper, ell^p weights), b (lower, slow decay), c "
                     "(lower, unit), or all");

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<ExperimentReport> reports;
    std::string out_dir;
    if (diverge->parsed()) {
      std::string v;
      const auto cfg = resolve(diverge, opt, with(base, 0.5, 16), v);
      out_dir = cfg.out_dir;
      reports.push_back(fraclab::lab::run_divergence(cfg));
    } else if (growth->parsed()) {
      std::string variant = "all";
      LabConfig defaults = with(base, 0.8, 14);
      const auto cfg = resolve(growth, opt, defaults, variant);
      if (growth->count("--variant")) variant = opt.variant;
      out_dir = cfg.out_dir;
      const bool all = variant == "all";
      if (all || variant == "a") {
        auto c = cfg;
        if (!growth->count("--p")) c.p = 1.0;  // the ell^1 showcase
        reports.push_back(
            fraclab::lab::run_growth(c, GrowthVariant::upper_a));
      }
      if (all || variant == "b")
        reports.push_back(
            fraclab::lab::run_growth(cfg, GrowthVariant::lower_b));
      if (all || variant == "c")
        reports.push_back(
            fraclab::lab::run_growth(cfg, GrowthVariant::lower_c));
      if (reports.empty())
        throw std::runtime_error("growth: unknown variant '" + variant + "'");
    } else if (converge->parsed()) {
      std::string v;
      LabConfig defaults = with(base, 0.75, 16);
      defaults.grid_lo = -4.0;
      defaults.grid_hi = 4.0;
      defaults.grid_step = 0.125;
      const auto cfg = resolve(converge, opt, defaults, v);
      out_dir = cfg.out_dir;
      reports.push_back(fraclab::lab::run_convergence(cfg));
    } else if (norms->parsed()) {
      std::string v;
      const auto cfg = resolve(norms, opt, base, v);
      out_dir = cfg.out_dir;
      reports.push_back(fraclab::lab::run_norm_sweep(cfg));
    } else if (kernel_bounds->parsed()) {
      std::string v;
      const auto cfg = resolve(kernel_bounds, opt, base, v);
      out_dir = cfg.out_dir;
      reports.push_back(fraclab::lab::run_kernel_bounds(cfg));
    } else if (multiplier->parsed()) {
      std::string v;
      const auto cfg = resolve(multiplier, opt, base, v);
      out_dir = cfg.out_dir;
      reports.push_back(fraclab::lab::run_multiplier(cfg));
    } else if (cotlar->parsed()) {
      std::string v;
      LabConfig defaults = base;
      defaults.grid_lo = -6.0;
      defaults.grid_hi = 6.0;
      defaults.grid_step = 0.125;
      const auto cfg = resolve(cotlar, opt, defaults, v);
      out_dir = cfg.out_dir;
      reports.push_back(fraclab::lab::run_cotlar(cfg));
    } else if (weights->parsed()) {
      std::string v;
      const auto cfg = resolve(weights, opt, base, v);
      out_dir = cfg.out_dir;
      reports.push_back(fraclab::lab::run_weights(cfg));
    } else if (lemma21->parsed()) {
      std::string v;
      const auto cfg = resolve(lemma21, opt, base, v);
      out_dir = cfg.out_dir;
      reports.push_back(fraclab::lab::run_lemma21(cfg));
    }

    std::ostringstream text;
    bool all_pass = true;
    for (const auto& r : reports) {
      text << r.text() << "\n";
      all_pass = all_pass && r.pass();
    }
    std::fputs(text.str().c_str(), stdout);
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      std::ofstream rf(std::filesystem::path(out_dir) / "report.txt",
                       std::ios::binary);
      rf << text.str();
    }
    return all_pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
