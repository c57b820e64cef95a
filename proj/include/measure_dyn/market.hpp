#pragma once

#include <cmath>

#include "measure_dyn/normal.hpp"
#include "measure_dyn/rng.hpp"
#include "measure_dyn/types.hpp"

namespace measure_dyn {

/// Objective-measure market parameters: drift mu, volatility sigma and the
/// risk-free rate r, all constant.
struct MarketParams {
  double mu = 0.0;
  double sigma = 0.2;
  double r = 0.0;

  void validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
      throw ConfigError("market.sigma must be positive and finite");
    if (!std::isfinite(mu)) throw ConfigError("market.mu must be finite");
    if (!std::isfinite(r)) throw ConfigError("market.r must be finite");
  }
};

/// Log-normal transition density rho(s_to, t+dt | s_from, t) in 1/price
/// units, with the (mu - sigma^2/2) median drift and 1/s_to prefactor.
inline double transition_density(double s_from, double s_to, double dt,
                                 const MarketParams& p) {
  if (!(s_from > 0.0) || !(s_to > 0.0))
    throw std::domain_error("transition_density: prices must be positive");
  if (!(dt > 0.0)) throw std::domain_error("transition_density: dt must be positive");
  const double sd = p.sigma * std::sqrt(dt);
  const double z = (std::log(s_to / s_from) - (p.mu - 0.5 * p.sigma * p.sigma) * dt) / sd;
  return norm_pdf(z) / (s_to * sd);
}

/// CDF of the one-step law: P[S(t+dt) <= s_to | S(t) = s_from].
inline double transition_cdf(double s_from, double s_to, double dt,
                             const MarketParams& p) {
  if (!(s_from > 0.0) || !(s_to > 0.0))
    throw std::domain_error("transition_cdf: prices must be positive");
  if (!(dt > 0.0)) throw std::domain_error("transition_cdf: dt must be positive");
  const double sd = p.sigma * std::sqrt(dt);
  const double z = (std::log(s_to / s_from) - (p.mu - 0.5 * p.sigma * p.sigma) * dt) / sd;
  return norm_cdf(z);
}

/// Exact one-step GBM sample with a supplied standard normal draw.
inline double sample_step(double s, double dt, const MarketParams& p, double z) {
  if (!(s > 0.0)) throw std::domain_error("sample_step: price must be positive");
  if (dt < 0.0) throw std::domain_error("sample_step: dt must be nonnegative");
  return s * std::exp((p.mu - 0.5 * p.sigma * p.sigma) * dt + p.sigma * std::sqrt(dt) * z);
}

inline double sample_step(double s, double dt, const MarketParams& p, SplitRng& rng) {
  return sample_step(s, dt, p, rng.normal());
}

}  // namespace measure_dyn
