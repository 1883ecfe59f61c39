#pragma once

#include <cmath>
#include <stdexcept>

#include "auctionlab/distribution.hpp"

namespace auctionlab {

// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

// H_k = sum_{j=1..k} 1/j, with H_0 = 0. Exact summation up to 10^6 terms,
// asymptotic expansion ln k + gamma + 1/(2k) - 1/(12k^2) beyond (its error
// there is below 1e-25, far under double precision).
inline double harmonic(long long k) {
  if (k < 0) throw std::invalid_argument("harmonic: k must be >= 0");
  if (k <= 1000000) {
    double h = 0.0;
    for (long long j = k; j >= 1; --j) h += 1.0 / static_cast<double>(j);
    return h;
  }
  const double kd = static_cast<double>(k);
  return std::log(kd) + kEulerGamma + 1.0 / (2.0 * kd) - 1.0 / (12.0 * kd * kd);
}

// Gamma(m+1) / Gamma(m+1-1/v), evaluated as a difference of log-gammas so
// large m cannot overflow.
inline double log_gamma_ratio(long long m, double v) {
  if (m < 1) throw std::invalid_argument("log_gamma_ratio: m must be >= 1");
  if (!(v > 1.0)) throw std::domain_error("log_gamma_ratio: requires v > 1");
  const double md = static_cast<double>(m);
  return std::exp(std::lgamma(md + 1.0) - std::lgamma(md + 1.0 - 1.0 / v));
}

// g(n, a, v) = a * Gamma(n+2)/Gamma(n+2-1/v) * Gamma(1-1/v).
//
// For n+1 Pareto draws: E X_(n+1) = g, E X_(n) = g (1-1/v), and
// E X_(n-1) = g (1-1/v)(2-1/v)/2.
inline double pareto_g(long long n, double a, double v) {
  if (n < 1) throw std::invalid_argument("pareto_g: n must be >= 1");
  if (!(a > 0.0)) throw std::invalid_argument("pareto_g: a must be > 0");
  if (!(v > 1.0))
    throw std::domain_error("pareto_g: infinite top order statistic for v <= 1");
  const double nd = static_cast<double>(n);
  return a * std::exp(std::lgamma(nd + 2.0) - std::lgamma(nd + 2.0 - 1.0 / v) +
                      std::lgamma(1.0 - 1.0 / v));
}

// The (n+1)^{1/v} shortcut for Gamma(n+2)/Gamma(n+2-1/v). An approximation:
// its relative error against log_gamma_ratio(n+1, v) shrinks as n grows.
inline double gamma_ratio_approx(long long n, double v) {
  if (n < 0) throw std::invalid_argument("gamma_ratio_approx: n must be >= 0");
  if (!(v > 1.0)) throw std::domain_error("gamma_ratio_approx: requires v > 1");
  return std::pow(static_cast<double>(n + 1), 1.0 / v);
}

// Expected i-th smallest of m i.i.d. draws (rank convention X_(1) <= ... <= X_(m)).
//
// Uniform[lo,hi]:  lo + (hi-lo) * i/(m+1)
// Exponential:     (1/lambda) * (H_m - H_{m-i})
// ParetoI:         a * m!/(m-i)! * Gamma(m+1-i-1/v) / Gamma(m+1-1/v),
//                  finite only when m+1-i > 1/v.
inline double expected_order_stat(const ValuationDistribution& dist, long long m, long long i) {
  if (m < 1) throw std::invalid_argument("expected_order_stat: m must be >= 1");
  if (i < 1 || i > m) throw std::invalid_argument("expected_order_stat: rank i must be in [1, m]");
  switch (dist.family()) {
    case Family::Uniform:
      return dist.lo() + (dist.hi() - dist.lo()) * static_cast<double>(i) /
                             static_cast<double>(m + 1);
    case Family::Exponential:
      return (harmonic(m) - harmonic(m - i)) / dist.lambda();
    case Family::ParetoI: {
      const double v = dist.shape();
      const double md = static_cast<double>(m);
      const double id = static_cast<double>(i);
      if (!(md + 1.0 - id - 1.0 / v > 0.0))
        throw std::domain_error("expected_order_stat: infinite mean for pareto1 rank " +
                                std::to_string(i) + " of " + std::to_string(m) +
                                " with v = " + std::to_string(v));
      return dist.scale() * std::exp(std::lgamma(md + 1.0) - std::lgamma(md - id + 1.0) +
                                     std::lgamma(md + 1.0 - id - 1.0 / v) -
                                     std::lgamma(md + 1.0 - 1.0 / v));
    }
  }
  return 0.0;
}

struct OrderStatQuery {
  ValuationDistribution dist;
  long long sample_count = 1;  // m
  long long rank = 1;          // i, 1 = smallest
};

inline double expected_order_stat(const OrderStatQuery& q) {
  return expected_order_stat(q.dist, q.sample_count, q.rank);
}

}  // namespace auctionlab
