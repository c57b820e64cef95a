#pragma once

#include <cmath>
#include <limits>

#include "measure_dyn/types.hpp"

namespace measure_dyn {

/// Discretization request for (S, F, t).  The F-range is widened to cover
/// [payoff_lo, payoff_hi] plus a margin when payoff bounds are supplied.
struct GridConfig {
  double t0 = 0.0;
  double maturity = 1.0;
  Index n_steps = 250;

  double s_min = 50.0;
  double s_max = 200.0;
  Index n_s = 201;

  double f_min = -50.0;
  double f_max = 150.0;
  Index n_f = 401;

  double f_margin = 0.2;
  double payoff_lo = std::numeric_limits<double>::quiet_NaN();
  double payoff_hi = std::numeric_limits<double>::quiet_NaN();
};

struct TimeGrid {
  double t0 = 0.0;
  double maturity = 1.0;
  Index n_steps = 1;

  double dt() const { return (maturity - t0) / static_cast<double>(n_steps); }
  double node(Index k) const { return t0 + dt() * static_cast<double>(k); }
  double horizon() const { return maturity - t0; }
};

/// S-axis log-uniform, F-axis uniform.
struct SpaceGrid {
  Vector s_nodes;
  Vector f_nodes;
  Vector log_s;
  double dlns = 0.0;
  double df = 0.0;

  Index n_s() const { return s_nodes.size(); }
  Index n_f() const { return f_nodes.size(); }

  /// Nearest S row to a price (in log distance).
  Index s_index(double s) const {
    double pos = (std::log(s) - log_s[0]) / dlns;
    Index i = static_cast<Index>(std::lround(pos));
    return std::min(std::max(i, Index{0}), n_s() - 1);
  }
};

struct Grids {
  TimeGrid time;
  SpaceGrid space;
};

/// Conditional density surface P(F_j | S_i, t) for one time slice; rows are
/// S nodes, columns F nodes, each row a density in F normalized to unit mass.
struct ConditionalPdf {
  Matrix values;
  double slice_time = 0.0;
};

Grids build_grids(const GridConfig& cfg);

/// Trapezoid mass of one S row.
double row_integral(const ConditionalPdf& pdf, const SpaceGrid& g, Index s_index);

/// Cumulative trapezoid CDF of one row, C[0] = 0, size n_f.
Vector row_cdf(const ConditionalPdf& pdf, const SpaceGrid& g, Index s_index);

/// CDF value at an arbitrary f, linearly interpolated between nodes; clamps
/// outside the grid.
double cdf_at(const Vector& cdf, const SpaceGrid& g, double f);

/// Quantile from a precomputed row CDF (left endpoint on flat segments).
double quantile_from_cdf(const Vector& cdf, const SpaceGrid& g, double q);

/// F_q with linear interpolation of the discrete CDF; requires a row whose
/// mass deviates from one by at most 1e-3.
double row_quantile(const ConditionalPdf& pdf, const SpaceGrid& g, Index s_index, double q);

}  // namespace measure_dyn
