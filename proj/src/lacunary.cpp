#include "fraclab/lacunary.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fraclab::lacunary {

double LacunarySpec::a_at(int j) const {
  const int i = j - j_min;
  if (i < 0 || i >= size()) throw std::out_of_range("LacunarySpec: index");
  return a[(std::size_t)i];
}

double LacunarySpec::v_at(int j) const {
  const int i = j - j_min;
  if (i < 0 || i >= size()) throw std::out_of_range("LacunarySpec: index");
  return v[(std::size_t)i];
}

void LacunarySpec::check_window(int n1, int n2) const {
  if (n1 < j_min || !(n1 < n2) || n2 > j_max() - 1)
    throw std::invalid_argument(
        "LacunarySpec: window needs j_min <= n1 < n2 <= j_max - 1");
}

void LacunarySpec::validate() const {
  if (!std::isfinite(rho) || !(rho > 1.0))
    throw std::invalid_argument("LacunarySpec: rho must exceed 1");
  if (a.size() < 2 || a.size() != v.size())
    throw std::invalid_argument(
        "LacunarySpec: need >= 2 heights and one weight per height");
  for (double x : a)
    if (!std::isfinite(x) || !(x > 0.0))
      throw std::invalid_argument("LacunarySpec: heights must be positive");
  for (double x : v)
    if (!std::isfinite(x))
      throw std::invalid_argument("LacunarySpec: weights must be finite");
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (!(a[i + 1] >= a[i] * rho * (1.0 - 1e-12)))
      throw std::invalid_argument("LacunarySpec: ratio below rho");
}

LacunarySpec geometric_spec(double ratio, int j_lo, int j_hi) {
  if (!std::isfinite(ratio) || !(ratio > 1.0) || j_hi <= j_lo)
    throw std::invalid_argument("geometric_spec: need ratio > 1, j_hi > j_lo");
  LacunarySpec s;
  s.rho = ratio;
  s.j_min = j_lo;
  for (int j = j_lo; j <= j_hi; ++j) {
    s.a.push_back(std::pow(ratio, (double)j));
    s.v.push_back(1.0);
  }
  s.validate();
  return s;
}

std::string to_text(const LacunarySpec& s) {
  s.validate();
  char buf[160];
  std::string out;
  std::snprintf(buf, sizeof buf, "# rho = %.17g\n", s.rho);
  out += buf;
  for (int i = 0; i < s.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%d %.17g %.17g\n", s.j_min + i,
                  s.a[(std::size_t)i], s.v[(std::size_t)i]);
    out += buf;
  }
  return out;
}

LacunarySpec from_text(const std::string& text) {
  LacunarySpec s;
  s.a.clear();
  s.v.clear();
  bool have_rho = false;
  bool have_first = false;
  int expect = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok[0] == '#') {
      const auto eq = line.find('=');
      if (line.find("rho") != std::string::npos && eq != std::string::npos) {
        try {
          s.rho = std::stod(line.substr(eq + 1));
        } catch (const std::exception&) {
          throw std::runtime_error("lacunary text: bad rho comment: " + line);
        }
        have_rho = true;
      }
      continue;
    }
    int j = 0;
    double av = 0.0, vv = 0.0;
    try {
      j = std::stoi(tok);
    } catch (const std::exception&) {
      throw std::runtime_error("lacunary text: bad index in line: " + line);
    }
    if (!(ls >> av >> vv))
      throw std::runtime_error("lacunary text: expected 'j a v': " + line);
    if (!have_first) {
      s.j_min = j;
      expect = j;
      have_first = true;
    }
    if (j != expect)
      throw std::runtime_error("lacunary text: indices must ascend by one");
    ++expect;
    s.a.push_back(av);
    s.v.push_back(vv);
  }
  if (!have_rho) {
    if (s.a.size() < 2)
      throw std::runtime_error("lacunary text: need at least two heights");
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < s.a.size(); ++i)
      m = std::min(m, s.a[i + 1] / s.a[i]);
    s.rho = m;
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("lacunary text: ") + e.what());
  }
  return s;
}

int NormalizedSpec::index_of(int orig_j) const {
  const int i = orig_j - orig_j_min;
  if (i < 0 || i >= (int)eta_index_of.size())
    throw std::out_of_range("NormalizedSpec: original index");
  return eta_index_of[(std::size_t)i];
}

std::pair<int, int> NormalizedSpec::remap_window(int n1, int n2) const {
  // v_j multiplies the layer step a_j -> a_{j+1}; the window spans heights
  // a_{n1} .. a_{n2+1}, so the remapped window spans the same eta range.
  return {index_of(n1), index_of(n2 + 1) - 1};
}

NormalizedSpec normalize(const LacunarySpec& in) {
  in.validate();
  const double r2 = in.rho * in.rho;
  std::vector<double> eta, omega;
  std::vector<int> pos((std::size_t)in.size(), 0);
  for (int i = 0; i + 1 < in.size(); ++i) {
    pos[(std::size_t)i] = (int)eta.size();
    eta.push_back(in.a[(std::size_t)i]);
    omega.push_back(in.v[(std::size_t)i]);
    double cur = in.a[(std::size_t)i];
    // Equality with rho^2 inserts nothing; the final step into a_{i+1}
    // keeps a ratio in (rho, rho^2].
    while (in.a[(std::size_t)i + 1] / cur > r2) {
      cur *= in.rho;
      eta.push_back(cur);
      omega.push_back(in.v[(std::size_t)i]);
    }
  }
  pos[(std::size_t)in.size() - 1] = (int)eta.size();
  eta.push_back(in.a.back());
  omega.push_back(in.v.back());

  int j_min_new;
  if (in.j_min <= 0 && 0 <= in.j_max())
    j_min_new = -pos[(std::size_t)(0 - in.j_min)];  // height of index 0 keeps 0
  else
    j_min_new = in.j_min;

  NormalizedSpec out;
  out.spec.rho = in.rho;
  out.spec.j_min = j_min_new;
  out.spec.a = std::move(eta);
  out.spec.v = std::move(omega);
  out.orig_j_min = in.j_min;
  out.eta_index_of.resize(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i)
    out.eta_index_of[i] = j_min_new + pos[i];
  out.spec.validate();
  return out;
}

}  // namespace fraclab::lacunary
