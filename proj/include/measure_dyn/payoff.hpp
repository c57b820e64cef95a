#pragma once

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "measure_dyn/grids.hpp"
#include "measure_dyn/rng.hpp"

namespace measure_dyn {

using PayoffFn = std::function<double(double)>;

struct AtomComponent {
  double weight = 1.0;
  PayoffFn payoff;
};

/// Single deterministic payoff F_T = payoff(S_T).
struct Deterministic {
  PayoffFn payoff;
};

/// Random payoff: component k realized with probability weight_k.
struct AtomMixture {
  std::vector<AtomComponent> components;
};

/// Terminal density given directly on the (S,F) grid.
struct SmoothDensity {
  Matrix values;
};

/// Maturity condition P(F | ., T).
class TerminalLaw {
 public:
  static TerminalLaw deterministic(PayoffFn fn);
  static TerminalLaw mixture(std::vector<AtomComponent> components);
  static TerminalLaw smooth(Matrix values);

  static TerminalLaw call(double strike);
  static TerminalLaw put(double strike);
  static TerminalLaw forward(double strike);
  static TerminalLaw binary(double strike, double cash);
  /// Zero-endowment investment case: delta(F).
  static TerminalLaw zero();
  /// Random-strike call: strike1 w.p. p, strike2 w.p. 1-p.
  static TerminalLaw random_strike(double p, double strike1, double strike2);

  bool is_smooth() const { return std::holds_alternative<SmoothDensity>(v_); }
  const SmoothDensity& smooth_density() const { return std::get<SmoothDensity>(v_); }

  /// Atom view: Deterministic is a single unit-weight component.  Empty for
  /// smooth laws.
  std::vector<AtomComponent> atoms() const;

  /// Exact raw moments E[F^1..3 | S_T = s] (atom laws only).
  void raw_moments(double s, double& m1, double& m2, double& m3) const;

 private:
  explicit TerminalLaw(std::variant<Deterministic, AtomMixture, SmoothDensity> v)
      : v_(std::move(v)) {}
  std::variant<Deterministic, AtomMixture, SmoothDensity> v_;
};

struct MollifyDiagnostics {
  double max_clipped_mass = 0.0;  // per-row mass lost to F-grid clipping, pre renormalization
};

/// Grid representation of the terminal law: each atom becomes a Gaussian bump
/// of its weight's mass and width mollify_width, rows renormalized to one.
ConditionalPdf terminal_pdf(const TerminalLaw& law, const SpaceGrid& g, double mollify_width,
                            double slice_time, MollifyDiagnostics* diag = nullptr);

/// Exact draw from the terminal law at S_T = s_T (no mollification).  Smooth
/// laws sample the nearest grid row by inverse CDF.
double sample_terminal(const TerminalLaw& law, double s_T, SplitRng& rng,
                       const SpaceGrid* g = nullptr);

/// Range of realizable payoff values over [s_min, s_max] (atom laws).
std::pair<double, double> payoff_range(const TerminalLaw& law, double s_min, double s_max,
                                       int n_scan = 257);

/// Exact per-row central terminal moments (mean, variance, third central).
void terminal_central_moments(const TerminalLaw& law, const SpaceGrid& g, Vector& mean,
                              Vector& var, Vector& skew);

}  // namespace measure_dyn
