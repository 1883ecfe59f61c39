#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "auctionlab/distribution.hpp"
#include "auctionlab/order_stats.hpp"

namespace auctionlab {

// Bidder-count convention used throughout this header: public operations take
// m = the number of bidders in the auction, i.e. m i.i.d. valuation draws.
// Operations about adding a bidder take n = the incumbent bidder count and
// evaluate order statistics over n+1 draws.

namespace detail {

inline void require_bidders(long long m, long long min_m, const char* where) {
  if (m < min_m)
    throw std::invalid_argument(std::string(where) + ": needs at least " +
                                std::to_string(min_m) + " bidders");
}

inline void require_finite_surplus(const ValuationDistribution& dist, const char* where) {
  if (dist.family() == Family::ParetoI && !(dist.shape() > 1.0))
    throw std::domain_error(std::string(where) +
                            ": expected buyer surplus is infinite for pareto1 with v <= 1");
}

}  // namespace detail

// E[X_(m) - X_(m-1)] over m draws: the expected winner valuation minus the
// expected price. Uniform -> (hi-lo)/(m+1); Exponential -> 1/lambda for every
// m; ParetoI -> g(m-1, a, v)/v.
inline double expected_buyer_surplus(const ValuationDistribution& dist, long long m) {
  detail::require_bidders(m, 2, "expected_buyer_surplus");
  detail::require_finite_surplus(dist, "expected_buyer_surplus");
  switch (dist.family()) {
    case Family::Uniform:
      return (dist.hi() - dist.lo()) / static_cast<double>(m + 1);
    case Family::Exponential:
      return 1.0 / dist.lambda();
    case Family::ParetoI:
      return pareto_g(m - 1, dist.scale(), dist.shape()) / dist.shape();
  }
  return 0.0;
}

// E[X_(m-1)] over m draws: the expected second price. Valid for ParetoI down
// to v = 1, where it equals a*m exactly (computed via Gamma(2-1/v), which is
// the finite continuation of g(m-1,a,v)*(1-1/v)).
inline double expected_seller_revenue(const ValuationDistribution& dist, long long m) {
  detail::require_bidders(m, 2, "expected_seller_revenue");
  switch (dist.family()) {
    case Family::Uniform:
      return dist.lo() + (dist.hi() - dist.lo()) * static_cast<double>(m - 1) /
                             static_cast<double>(m + 1);
    case Family::Exponential:
      return (harmonic(m) - 1.0) / dist.lambda();
    case Family::ParetoI: {
      const double v = dist.shape();
      const double md = static_cast<double>(m);
      return dist.scale() * std::exp(std::lgamma(md + 1.0) - std::lgamma(md + 1.0 - 1.0 / v) +
                                     std::lgamma(2.0 - 1.0 / v));
    }
  }
  return 0.0;
}

// E(p_{n+1} - p_n): the change in expected buyer surplus when bidder n+1
// joins n incumbents, via the decomposition
//   (1/(n+1)) [E(X_(n+1) - X_(n)) - 2 E(X_(n) - X_(n-1))]
// with all order statistics over n+1 draws. Exponential -> 0 exactly;
// ParetoI -> g(n,a,v) / (v^2 (n+1)); other families via expected_order_stat.
inline double surplus_delta_closed(const ValuationDistribution& dist, long long n) {
  detail::require_bidders(n, 2, "surplus_delta_closed");
  detail::require_finite_surplus(dist, "surplus_delta_closed");
  switch (dist.family()) {
    case Family::Exponential:
      return 0.0;
    case Family::ParetoI: {
      const double v = dist.shape();
      return pareto_g(n, dist.scale(), v) / (v * v * static_cast<double>(n + 1));
    }
    case Family::Uniform:
      break;
  }
  const long long m = n + 1;
  const double top = expected_order_stat(dist, m, m);
  const double second = expected_order_stat(dist, m, m - 1);
  const double third = expected_order_stat(dist, m, m - 2);
  return ((top - second) - 2.0 * (second - third)) / static_cast<double>(m);
}

// Expected seller revenue divided by expected buyer surplus, m bidders.
// Exponential -> harmonic(m) - 1 exactly (the ln m + gamma - 1 asymptote);
// ParetoI -> v - 1 exactly, independent of m and a.
inline double revenue_surplus_ratio(const ValuationDistribution& dist, long long m) {
  detail::require_bidders(m, 2, "revenue_surplus_ratio");
  detail::require_finite_surplus(dist, "revenue_surplus_ratio");
  switch (dist.family()) {
    case Family::Exponential:
      return harmonic(m) - 1.0;
    case Family::ParetoI:
      return dist.shape() - 1.0;
    case Family::Uniform:
      break;
  }
  return expected_seller_revenue(dist, m) / expected_buyer_surplus(dist, m);
}

// E p_m / m: what each of m symmetric bidders expects. Strictly decreasing in
// m for any distribution with support over two or more values.
inline double per_bidder_surplus(const ValuationDistribution& dist, long long m) {
  return expected_buyer_surplus(dist, m) / static_cast<double>(m);
}

// s_{n+1} - s_n: the seller's gain from an added bidder. Exact per family:
// Uniform[lo,hi] -> (hi-lo) * 2/(n^2+3n+2); Exponential -> 1/(lambda (n+1));
// ParetoI -> exact difference of revenue closed forms.
inline double marginal_revenue(const ValuationDistribution& dist, long long n) {
  detail::require_bidders(n, 2, "marginal_revenue");
  switch (dist.family()) {
    case Family::Uniform: {
      const double nd = static_cast<double>(n);
      return (dist.hi() - dist.lo()) * 2.0 / (nd * nd + 3.0 * nd + 2.0);
    }
    case Family::Exponential:
      return 1.0 / (dist.lambda() * static_cast<double>(n + 1));
    case Family::ParetoI:
      return expected_seller_revenue(dist, n + 1) - expected_seller_revenue(dist, n);
  }
  return 0.0;
}

struct MarginalRevenueRate {
  double approx_value = 0.0;      // leading-order expression, evaluated at n
  std::string order_class;        // asymptotic rate descriptor, e.g. "1/n^2"
};

// Asymptotic rate of s_{n+1} - s_n. Uniform decays like 1/n^2, exponential
// like 1/n, ParetoI like 1/n^{1-1/v} (so 1/sqrt(n) at v = 2, flattening to a
// constant as v -> 1). approx_value evaluates the leading-order expression;
// the exact value is marginal_revenue.
inline MarginalRevenueRate marginal_revenue_rate(const ValuationDistribution& dist, long long n) {
  detail::require_bidders(n, 2, "marginal_revenue_rate");
  MarginalRevenueRate out;
  switch (dist.family()) {
    case Family::Uniform: {
      const double nd = static_cast<double>(n);
      out.approx_value = (dist.hi() - dist.lo()) * 2.0 / (nd * nd + 3.0 * nd + 2.0);
      out.order_class = "1/n^2";
      return out;
    }
    case Family::Exponential:
      out.approx_value = 1.0 / (dist.lambda() * static_cast<double>(n + 1));
      out.order_class = "1/n";
      return out;
    case Family::ParetoI: {
      const double v = dist.shape();
      // (1-1/v) Gamma(1-1/v) = Gamma(2-1/v), finite down to v = 1.
      out.approx_value = dist.scale() * std::exp(std::lgamma(2.0 - 1.0 / v)) *
                         (std::pow(static_cast<double>(n + 1), 1.0 / v) -
                          std::pow(static_cast<double>(n), 1.0 / v));
      const double expo = 1.0 - 1.0 / v;
      if (expo < 1e-3) {
        out.order_class = "constant";
      } else if (v == 2.0) {
        out.order_class = "1/sqrt(n)";
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "1/n^%.4g", expo);
        out.order_class = buf;
      }
      return out;
    }
  }
  return out;
}

struct SurplusRevenueRow {
  long long bidders = 0;  // m
  double buyer_surplus = 0.0;
  double seller_revenue = 0.0;
  double per_bidder_surplus = 0.0;
  double marginal_revenue = 0.0;  // revenue(m+1) - revenue(m)
};

struct SurplusRevenueTable {
  ValuationDistribution dist;
  std::vector<SurplusRevenueRow> rows;
};

inline SurplusRevenueTable build_table(const ValuationDistribution& dist, long long m_min,
                                       long long m_max) {
  if (m_min < 2 || m_min > m_max)
    throw std::invalid_argument("build_table: requires 2 <= m_min <= m_max");
  detail::require_finite_surplus(dist, "build_table");
  SurplusRevenueTable table{dist, {}};
  table.rows.reserve(static_cast<std::size_t>(m_max - m_min + 1));
  for (long long m = m_min; m <= m_max; ++m) {
    SurplusRevenueRow row;
    row.bidders = m;
    row.buyer_surplus = expected_buyer_surplus(dist, m);
    row.seller_revenue = expected_seller_revenue(dist, m);
    row.per_bidder_surplus = row.buyer_surplus / static_cast<double>(m);
    row.marginal_revenue = expected_seller_revenue(dist, m + 1) - row.seller_revenue;
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace auctionlab
