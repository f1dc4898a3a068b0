#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fraclab::lacunary {

// Increasing positive heights a_j for j = j_min .. j_min + size - 1 with
// consecutive ratios a_{j+1}/a_j >= rho > 1, plus one weight v_j per height.
// Windowed differential transforms sum v_j (P[a_{j+1}] - P[a_j]) over
// j = n1..n2, so a window needs j_min <= n1 < n2 <= j_max() - 1; the top
// weight is carried for round-trips but no window reaches it.
struct LacunarySpec {
  double rho = 2.0;
  int j_min = 0;
  std::vector<double> a;
  std::vector<double> v;

  int size() const { return (int)a.size(); }
  int j_max() const { return j_min + size() - 1; }
  double a_at(int j) const;
  double v_at(int j) const;
  void check_window(int n1, int n2) const;
  void validate() const;
};

// a_j = ratio^j, unit weights, indices j_lo .. j_hi; rho = ratio.
LacunarySpec geometric_spec(double ratio, int j_lo, int j_hi);

// Plain text: an optional "# rho = <r>" comment line, then one "j a_j v_j"
// line per height with ascending consecutive j.  Round-trips exactly.
std::string to_text(const LacunarySpec& s);

// Inverse of to_text.  When no rho comment is present, rho is inferred as
// the smallest consecutive ratio.  Throws std::runtime_error on bad input.
LacunarySpec from_text(const std::string& text);

// Ratio normalization: wherever a gap exceeds rho^2, heights rho * current
// are inserted until every consecutive ratio lands in [rho, rho^2]; each
// inserted height on [a_j, a_{j+1}) copies the weight v_j.  Because the
// layer differences telescope, any window over the original heights equals
// the remapped window over the inserted ones, so nothing is lost by working
// with boundedly-lacunary sequences only.  The sup of |weights| is
// unchanged.  New indices anchor so a height of original index 0 keeps
// index 0; otherwise j_min is kept.  Normalizing a normalized spec is the
// identity.
struct NormalizedSpec {
  LacunarySpec spec;               // heights eta_k, weights omega_k
  int orig_j_min = 0;
  std::vector<int> eta_index_of;   // a_{orig_j_min + i} sits at spec index eta_index_of[i]

  int index_of(int orig_j) const;
  // Window (n1, n2) over original indices -> the equal-valued window over
  // the normalized indices.
  std::pair<int, int> remap_window(int n1, int n2) const;
};

NormalizedSpec normalize(const LacunarySpec& s);

}  // namespace fraclab::lacunary
