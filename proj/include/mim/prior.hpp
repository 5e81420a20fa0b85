#pragma once

// Two-step estimate of a minority prior known only to lie in [lower, upper]:
// pick the coefficient that makes both endpoints equally important, then take
// the argmax 1/w of the importance weight as the prior estimate.

#include <cmath>
#include <string>

#include "mim/distribution.hpp"
#include "mim/error.hpp"
#include "mim/measures.hpp"

namespace mim {

/// 0 < lower <= upper < 1/2.
class PriorBounds {
public:
  PriorBounds(double lower, double upper) : lower_(lower), upper_(upper) {
    if (!(lower > 0.0) || !(upper < 0.5) || !(lower <= upper)) {
      throw Error(ErrorCode::OutOfRange, "prior bounds need 0 < lower <= upper < 0.5, got [" +
                                             std::to_string(lower) + ", " + std::to_string(upper) + "]");
    }
  }

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  bool degenerate() const noexcept { return lower_ == upper_; }

private:
  double lower_;
  double upper_;
};

namespace detail {
// ln(upper / lower), accurate for nearly equal bounds.
inline double log_ratio(const PriorBounds& b) { return std::log1p((b.upper() - b.lower()) / b.lower()); }
}  // namespace detail

/// w = (ln upper - ln lower) / (upper - lower).
inline ImportanceCoefficient select_omega(const PriorBounds& b) {
  if (b.degenerate()) {
    throw Error(ErrorCode::DegenerateInterval, "lower == upper; use estimate_prior for the point limit");
  }
  return {detail::log_ratio(b) / (b.upper() - b.lower()), Provenance::balancing};
}

/// Logarithmic mean (upper - lower) / (ln upper - ln lower); equals `upper` on a degenerate interval.
inline double estimate_prior(const PriorBounds& b) {
  if (b.degenerate()) return b.upper();
  return (b.upper() - b.lower()) / detail::log_ratio(b);
}

/// mim(bernoulli(lower), w) - mim(bernoulli(upper), w): how far the exact balancing
/// equation is from zero at a given coefficient.
inline double balanced_importance_residual(const PriorBounds& b, ImportanceCoefficient w) {
  if (b.degenerate()) return 0.0;
  return mim(bernoulli(b.lower()), w) - mim(bernoulli(b.upper()), w);
}

}  // namespace mim
