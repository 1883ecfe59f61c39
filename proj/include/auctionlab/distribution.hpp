#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include "auctionlab/rng.hpp"

namespace auctionlab {

enum class Family { Uniform, Exponential, ParetoI };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Uniform: return "uniform";
    case Family::Exponential: return "exponential";
    case Family::ParetoI: return "pareto1";
  }
  return "?";
}

// Parametric valuation distribution. One of:
//   Uniform(lo, hi)        lo < hi
//   Exponential(lambda)    lambda > 0
//   ParetoI(a, v)          scale a > 0, shape v >= 1
//
// ParetoI with v = 1 (the equal-revenue distribution) is representable but has
// an infinite mean; operations that need a finite top-order-statistic mean
// reject it with std::domain_error instead of returning infinity. Parameters
// are validated at construction, so a constructed value is always usable and
// immutable (safe to share across threads).
class ValuationDistribution {
 public:
  static ValuationDistribution uniform(double lo, double hi) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
      throw std::invalid_argument("uniform: requires finite lo < hi");
    return ValuationDistribution(Family::Uniform, lo, hi);
  }

  static ValuationDistribution exponential(double lambda) {
    if (!(std::isfinite(lambda) && lambda > 0.0))
      throw std::invalid_argument("exponential: requires rate lambda > 0");
    return ValuationDistribution(Family::Exponential, lambda, 0.0);
  }

  static ValuationDistribution pareto1(double a, double v) {
    if (!(std::isfinite(a) && a > 0.0))
      throw std::invalid_argument("pareto1: requires scale a > 0");
    if (!(std::isfinite(v) && v >= 1.0))
      throw std::invalid_argument("pareto1: requires shape v >= 1");
    return ValuationDistribution(Family::ParetoI, a, v);
  }

  Family family() const { return family_; }

  double lo() const { return p0_; }      // Uniform
  double hi() const { return p1_; }      // Uniform
  double lambda() const { return p0_; }  // Exponential
  double scale() const { return p0_; }   // ParetoI a
  double shape() const { return p1_; }   // ParetoI v

  double cdf(double x) const {
    switch (family_) {
      case Family::Uniform:
        if (x <= p0_) return 0.0;
        if (x >= p1_) return 1.0;
        return (x - p0_) / (p1_ - p0_);
      case Family::Exponential:
        return x <= 0.0 ? 0.0 : -std::expm1(-p0_ * x);
      case Family::ParetoI:
        return x <= p0_ ? 0.0 : 1.0 - std::pow(p0_ / x, p1_);
    }
    return 0.0;
  }

  // Density on the closed support, 0 elsewhere.
  double pdf(double x) const {
    switch (family_) {
      case Family::Uniform:
        return (x >= p0_ && x <= p1_) ? 1.0 / (p1_ - p0_) : 0.0;
      case Family::Exponential:
        return x >= 0.0 ? p0_ * std::exp(-p0_ * x) : 0.0;
      case Family::ParetoI:
        return x >= p0_ ? p1_ * std::pow(p0_ / x, p1_) / x : 0.0;
    }
    return 0.0;
  }

  double quantile(double u) const {
    if (!(u > 0.0 && u < 1.0))
      throw std::domain_error("quantile: u must lie in (0,1)");
    switch (family_) {
      case Family::Uniform:
        return p0_ + u * (p1_ - p0_);
      case Family::Exponential:
        return -std::log1p(-u) / p0_;
      case Family::ParetoI:
        return p0_ * std::pow(1.0 - u, -1.0 / p1_);
    }
    return 0.0;
  }

  // Inverse-transform draw: a pure function of one uniform variate, so paired
  // designs that reuse a stream see coupled values.
  double sample(RngStream& rng) const { return quantile(rng.next_uniform01()); }

  // Myerson virtual value x - (1-F(x))/f(x). Defined on the support.
  double virtual_value(double x) const {
    switch (family_) {
      case Family::Uniform:
        if (x < p0_ || x > p1_) throw std::domain_error("virtual_value: x outside support");
        return 2.0 * x - p1_;
      case Family::Exponential:
        if (x < 0.0) throw std::domain_error("virtual_value: x outside support");
        return x - 1.0 / p0_;
      case Family::ParetoI:
        if (x < p0_) throw std::domain_error("virtual_value: x outside support");
        return x * (1.0 - 1.0 / p1_);
    }
    return 0.0;
  }

  // Myerson regularity: virtual value strictly increasing. Fails only for
  // ParetoI with v = 1, where the virtual value is identically zero-sloped.
  bool is_regular() const {
    return family_ != Family::ParetoI || p1_ > 1.0;
  }

  double support_min() const {
    switch (family_) {
      case Family::Uniform: return p0_;
      case Family::Exponential: return 0.0;
      case Family::ParetoI: return p0_;
    }
    return 0.0;
  }

  double support_max() const {
    return family_ == Family::Uniform ? p1_ : std::numeric_limits<double>::infinity();
  }

  bool has_finite_mean() const {
    return family_ != Family::ParetoI || p1_ > 1.0;
  }

  double mean() const {
    switch (family_) {
      case Family::Uniform:
        return 0.5 * (p0_ + p1_);
      case Family::Exponential:
        return 1.0 / p0_;
      case Family::ParetoI:
        if (p1_ <= 1.0)
          throw std::domain_error("mean: infinite for pareto1 with v <= 1");
        return p0_ * p1_ / (p1_ - 1.0);
    }
    return 0.0;
  }

  // E[(X - s)+], the expected excess of a draw over the level s.
  double expected_excess(double s) const {
    switch (family_) {
      case Family::Uniform: {
        if (s >= p1_) return 0.0;
        if (s <= p0_) return 0.5 * (p0_ + p1_) - s;
        return 0.5 * (p1_ - s) * (p1_ - s) / (p1_ - p0_);
      }
      case Family::Exponential: {
        if (s <= 0.0) return 1.0 / p0_ - s;
        return std::exp(-p0_ * s) / p0_;
      }
      case Family::ParetoI: {
        if (p1_ <= 1.0)
          throw std::domain_error("expected_excess: infinite for pareto1 with v <= 1");
        if (s <= p0_) return mean() - s;
        return std::pow(p0_, p1_) * std::pow(s, 1.0 - p1_) / (p1_ - 1.0);
      }
    }
    return 0.0;
  }

  std::string describe() const {
    char buf[96];
    switch (family_) {
      case Family::Uniform:
        std::snprintf(buf, sizeof buf, "uniform(lo=%g, hi=%g)", p0_, p1_);
        break;
      case Family::Exponential:
        std::snprintf(buf, sizeof buf, "exponential(lambda=%g)", p0_);
        break;
      case Family::ParetoI:
        std::snprintf(buf, sizeof buf, "pareto1(a=%g, v=%g)", p0_, p1_);
        break;
    }
    return buf;
  }

  friend bool operator==(const ValuationDistribution& a, const ValuationDistribution& b) {
    return a.family_ == b.family_ && a.p0_ == b.p0_ && a.p1_ == b.p1_;
  }

 private:
  ValuationDistribution(Family f, double p0, double p1) : family_(f), p0_(p0), p1_(p1) {}

  Family family_;
  double p0_;
  double p1_;
};

}  // namespace auctionlab
