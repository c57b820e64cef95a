#include "measure_dyn/payoff.hpp"

#include <algorithm>
#include <cmath>

#include "measure_dyn/normal.hpp"

namespace measure_dyn {

TerminalLaw TerminalLaw::deterministic(PayoffFn fn) {
  return TerminalLaw(Deterministic{std::move(fn)});
}

TerminalLaw TerminalLaw::mixture(std::vector<AtomComponent> components) {
  if (components.empty()) throw ConfigError("payoff: mixture needs at least one component");
  double total = 0.0;
  for (const auto& c : components) {
    if (!(c.weight > 0.0)) throw ConfigError("payoff.weights must be positive");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-9) throw ConfigError("payoff.weights must sum to 1");
  return TerminalLaw(AtomMixture{std::move(components)});
}

TerminalLaw TerminalLaw::smooth(Matrix values) {
  return TerminalLaw(SmoothDensity{std::move(values)});
}

TerminalLaw TerminalLaw::call(double strike) {
  return deterministic([strike](double s) { return std::max(s - strike, 0.0); });
}

TerminalLaw TerminalLaw::put(double strike) {
  return deterministic([strike](double s) { return std::max(strike - s, 0.0); });
}

TerminalLaw TerminalLaw::forward(double strike) {
  return deterministic([strike](double s) { return s - strike; });
}

TerminalLaw TerminalLaw::binary(double strike, double cash) {
  return deterministic([strike, cash](double s) { return s > strike ? cash : 0.0; });
}

TerminalLaw TerminalLaw::zero() {
  return deterministic([](double) { return 0.0; });
}

TerminalLaw TerminalLaw::random_strike(double p, double strike1, double strike2) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("payoff.p must be in (0,1)");
  std::vector<AtomComponent> comps;
  comps.push_back({p, [strike1](double s) { return std::max(s - strike1, 0.0); }});
  comps.push_back({1.0 - p, [strike2](double s) { return std::max(s - strike2, 0.0); }});
  return mixture(std::move(comps));
}

std::vector<AtomComponent> TerminalLaw::atoms() const {
  if (const auto* d = std::get_if<Deterministic>(&v_)) return {{1.0, d->payoff}};
  if (const auto* m = std::get_if<AtomMixture>(&v_)) return m->components;
  return {};
}

void TerminalLaw::raw_moments(double s, double& m1, double& m2, double& m3) const {
  const auto comps = atoms();
  if (comps.empty()) throw StateError("raw_moments: smooth law has no atom moments");
  m1 = m2 = m3 = 0.0;
  for (const auto& c : comps) {
    const double y = c.payoff(s);
    m1 += c.weight * y;
    m2 += c.weight * y * y;
    m3 += c.weight * y * y * y;
  }
}

ConditionalPdf terminal_pdf(const TerminalLaw& law, const SpaceGrid& g, double mollify_width,
                            double slice_time, MollifyDiagnostics* diag) {
  if (!(mollify_width > 0.0)) throw std::domain_error("terminal_pdf: mollify_width must be positive");

  ConditionalPdf pdf;
  pdf.slice_time = slice_time;
  pdf.values = Matrix::Zero(g.n_s(), g.n_f());

  if (law.is_smooth()) {
    const Matrix& m = law.smooth_density().values;
    if (m.rows() != g.n_s() || m.cols() != g.n_f())
      throw ConfigError("terminal_pdf: smooth density dimensions do not match the grid");
    pdf.values = m.cwiseMax(0.0);
  } else {
    const auto comps = law.atoms();
    const double f_lo = g.f_nodes[0];
    const double f_hi = g.f_nodes[g.n_f() - 1];
    for (Index i = 0; i < g.n_s(); ++i) {
      const double s = g.s_nodes[i];
      for (const auto& c : comps) {
        const double center = c.payoff(s);
        if (center < f_lo - 5.0 * mollify_width || center > f_hi + 5.0 * mollify_width)
          throw NumericalError(
              "terminal_pdf: payoff value outside the F-grid; rebuild grid with wider F range");
        for (Index j = 0; j < g.n_f(); ++j) {
          const double z = (g.f_nodes[j] - center) / mollify_width;
          pdf.values(i, j) += c.weight * norm_pdf(z) / mollify_width;
        }
      }
    }
  }

  double max_clip = 0.0;
  for (Index i = 0; i < g.n_s(); ++i) {
    const double mass = row_integral(pdf, g, i);
    if (!(mass > 0.0)) throw NumericalError("terminal_pdf: empty row after clipping");
    max_clip = std::max(max_clip, std::abs(1.0 - mass));
    pdf.values.row(i) /= mass;
  }
  if (diag) diag->max_clipped_mass = max_clip;
  return pdf;
}

double sample_terminal(const TerminalLaw& law, double s_T, SplitRng& rng, const SpaceGrid* g) {
  if (!(s_T > 0.0)) throw std::domain_error("sample_terminal: price must be positive");
  if (law.is_smooth()) {
    if (!g) throw StateError("sample_terminal: smooth law requires the space grid");
    ConditionalPdf pdf{law.smooth_density().values, 0.0};
    const Index i = g->s_index(s_T);
    const Vector cdf = row_cdf(pdf, *g, i);
    return quantile_from_cdf(cdf, *g, rng.uniform());
  }
  const auto comps = law.atoms();
  if (comps.size() == 1) return comps[0].payoff(s_T);
  double u = rng.uniform();
  for (const auto& c : comps) {
    if (u < c.weight) return c.payoff(s_T);
    u -= c.weight;
  }
  return comps.back().payoff(s_T);
}

std::pair<double, double> payoff_range(const TerminalLaw& law, double s_min, double s_max,
                                       int n_scan) {
  const auto comps = law.atoms();
  if (comps.empty()) throw StateError("payoff_range: smooth law has no payoff function");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const double lx0 = std::log(s_min), lx1 = std::log(s_max);
  for (int k = 0; k < n_scan; ++k) {
    const double s = std::exp(lx0 + (lx1 - lx0) * k / static_cast<double>(n_scan - 1));
    for (const auto& c : comps) {
      const double y = c.payoff(s);
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
  }
  return {lo, hi};
}

void terminal_central_moments(const TerminalLaw& law, const SpaceGrid& g, Vector& mean,
                              Vector& var, Vector& skew) {
  mean.resize(g.n_s());
  var.resize(g.n_s());
  skew.resize(g.n_s());
  for (Index i = 0; i < g.n_s(); ++i) {
    double m1, m2, m3;
    law.raw_moments(g.s_nodes[i], m1, m2, m3);
    mean[i] = m1;
    var[i] = std::max(m2 - m1 * m1, 0.0);
    skew[i] = m3 - 3.0 * m2 * m1 + 2.0 * m1 * m1 * m1;
  }
}

}  // namespace measure_dyn
