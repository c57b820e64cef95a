#include "measure_dyn/grids.hpp"

#include <algorithm>
#include <cmath>

namespace measure_dyn {

Grids build_grids(const GridConfig& cfg) {
  if (!(cfg.maturity > cfg.t0)) throw ConfigError("time.maturity must exceed time.t0");
  if (cfg.n_steps < 1) throw ConfigError("time.n_steps must be >= 1");
  if (!(cfg.s_min > 0.0)) throw ConfigError("grid.s_min must be positive");
  if (!(cfg.s_max > cfg.s_min)) throw ConfigError("grid.s_min must be below grid.s_max");
  if (cfg.n_s < 3) throw ConfigError("grid.n_s must be >= 3");
  if (cfg.n_f < 3) throw ConfigError("grid.n_f must be >= 3");

  double f_lo = cfg.f_min;
  double f_hi = cfg.f_max;
  if (std::isfinite(cfg.payoff_lo) && std::isfinite(cfg.payoff_hi)) {
    const double span = std::max(cfg.payoff_hi - cfg.payoff_lo, 1e-12);
    f_lo = std::min(f_lo, cfg.payoff_lo - cfg.f_margin * span);
    f_hi = std::max(f_hi, cfg.payoff_hi + cfg.f_margin * span);
  }
  if (!(f_hi > f_lo)) throw ConfigError("grid.f_min must be below grid.f_max");

  Grids g;
  g.time = TimeGrid{cfg.t0, cfg.maturity, cfg.n_steps};

  SpaceGrid& sp = g.space;
  sp.s_nodes.resize(cfg.n_s);
  sp.log_s.resize(cfg.n_s);
  const double lx0 = std::log(cfg.s_min);
  const double lx1 = std::log(cfg.s_max);
  sp.dlns = (lx1 - lx0) / static_cast<double>(cfg.n_s - 1);
  for (Index i = 0; i < cfg.n_s; ++i) {
    sp.log_s[i] = lx0 + sp.dlns * static_cast<double>(i);
    sp.s_nodes[i] = std::exp(sp.log_s[i]);
  }
  sp.s_nodes[0] = cfg.s_min;
  sp.s_nodes[cfg.n_s - 1] = cfg.s_max;

  sp.f_nodes.resize(cfg.n_f);
  sp.df = (f_hi - f_lo) / static_cast<double>(cfg.n_f - 1);
  for (Index j = 0; j < cfg.n_f; ++j)
    sp.f_nodes[j] = f_lo + sp.df * static_cast<double>(j);
  sp.f_nodes[cfg.n_f - 1] = f_hi;

  return g;
}

double row_integral(const ConditionalPdf& pdf, const SpaceGrid& g, Index s_index) {
  const auto row = pdf.values.row(s_index);
  double sum = row.sum() - 0.5 * (row(0) + row(g.n_f() - 1));
  return sum * g.df;
}

Vector row_cdf(const ConditionalPdf& pdf, const SpaceGrid& g, Index s_index) {
  const auto row = pdf.values.row(s_index);
  Vector c(g.n_f());
  c[0] = 0.0;
  for (Index j = 1; j < g.n_f(); ++j)
    c[j] = c[j - 1] + 0.5 * (row(j - 1) + row(j)) * g.df;
  return c;
}

double cdf_at(const Vector& cdf, const SpaceGrid& g, double f) {
  const Index n = cdf.size();
  const double f0 = g.f_nodes[0];
  if (f <= f0) return 0.0;
  if (f >= g.f_nodes[n - 1]) return cdf[n - 1];
  const double pos = (f - f0) / g.df;
  const Index j = std::min(static_cast<Index>(pos), n - 2);
  const double w = pos - static_cast<double>(j);
  return cdf[j] + w * (cdf[j + 1] - cdf[j]);
}

double quantile_from_cdf(const Vector& cdf, const SpaceGrid& g, double q) {
  const Index n = cdf.size();
  const double target = q * cdf[n - 1];
  // first node with cdf >= target
  Index hi = 1;
  while (hi < n - 1 && cdf[hi] < target) ++hi;
  const Index lo = hi - 1;
  const double seg = cdf[hi] - cdf[lo];
  if (seg <= 0.0) return g.f_nodes[lo];  // flat segment: left endpoint
  double w = (target - cdf[lo]) / seg;
  w = std::min(std::max(w, 0.0), 1.0);
  return g.f_nodes[lo] + w * g.df;
}

double row_quantile(const ConditionalPdf& pdf, const SpaceGrid& g, Index s_index, double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("row_quantile: q must be in (0,1)");
  const Vector cdf = row_cdf(pdf, g, s_index);
  if (std::abs(cdf[cdf.size() - 1] - 1.0) > 1e-3)
    throw StateError("row_quantile: row is not normalized");
  return quantile_from_cdf(cdf, g, q);
}

}  // namespace measure_dyn
