#pragma once

// Selecting the importance coefficient: closed-form sufficient thresholds and the
// numerically located crossover where a distribution's MIM overtakes the uniform one.

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstddef>
#include <string>
#include <string_view>

#include "mim/distribution.hpp"
#include "mim/error.hpp"
#include "mim/measures.hpp"

namespace mim {

/// Candidates this close below 1/n are treated as sitting at 1/n (the threshold diverges there).
inline constexpr double kDegenerateGap = 1e-12;

enum class ThresholdRule { theorem1, theorem2, theorem3 };

constexpr std::string_view to_string(ThresholdRule r) noexcept {
  switch (r) {
    case ThresholdRule::theorem1: return "theorem1";
    case ThresholdRule::theorem2: return "theorem2";
    case ThresholdRule::theorem3: return "theorem3";
  }
  return "unknown";
}

struct ThresholdReport {
  double threshold;
  double witness_prob;
  ThresholdRule rule;
  /// The theorems are stated for n > 2; binary distributions are admitted as an extension.
  bool binary_extension;

  ImportanceCoefficient coefficient() const {
    return {threshold, rule == ThresholdRule::theorem1 ? Provenance::theorem1 : Provenance::theorem3};
  }
};

/// -ln(p_s) / (1/n - p_s): every w at or above it makes mim(d, w) >= mim(uniform(n), w)
/// for any distribution over n events containing an entry p_s < 1/n.
inline double theorem2_threshold(double p_s, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::TooFewEvents, "threshold needs n >= 2");
  const double inv_n = 1.0 / static_cast<double>(n);
  if (!(p_s > 0.0) || !(p_s < inv_n - kDegenerateGap)) {
    throw Error(ErrorCode::OutOfRange, "threshold needs 0 < p_s < 1/n, got " + std::to_string(p_s));
  }
  return -std::log(p_s) / (inv_n - p_s);
}

inline ThresholdReport theorem1_threshold(const Distribution& d) {
  const double inv_n = 1.0 / static_cast<double>(d.size());
  const double p_min = d.min();
  if (!(p_min < inv_n - kDegenerateGap)) {
    throw Error(ErrorCode::DegenerateDistribution, "uniform distribution: no finite threshold exists");
  }
  return {theorem2_threshold(p_min, d.size()), p_min, ThresholdRule::theorem1, d.size() == 2};
}

/// Smallest Theorem-2 threshold over all entries below 1/n; never larger than theorem1_threshold.
inline ThresholdReport theorem3_threshold(const Distribution& d) {
  const double inv_n = 1.0 / static_cast<double>(d.size());
  ThresholdReport best{std::numeric_limits<double>::infinity(), 0.0, ThresholdRule::theorem3, d.size() == 2};
  for (double p : d) {
    if (!(p < inv_n - kDegenerateGap)) continue;
    const double t = theorem2_threshold(p, d.size());
    if (t < best.threshold) {
      best.threshold = t;
      best.witness_prob = p;
    }
  }
  if (!std::isfinite(best.threshold)) {
    throw Error(ErrorCode::DegenerateDistribution, "no entry lies below 1/n");
  }
  return best;
}

/// True iff w * max_i p_i < 2, the regime where the uniform distribution maximizes the MIM.
inline bool max_value_condition(const Distribution& d, ImportanceCoefficient w) {
  return w.value() * d.max() < 2.0;
}

inline constexpr double kCrossingGridStep = 0.01;
inline constexpr double kCrossingTolerance = 1e-6;

/// Smallest w in (0, search_max] where mim(d, w) = mim(uniform(n), w) with the difference
/// turning positive; bracketed on a 0.01 grid and refined by bisection to 1e-6.
inline ImportanceCoefficient crossing_coefficient(const Distribution& d, double search_max) {
  if (!(search_max > 0.0)) throw Error(ErrorCode::OutOfRange, "search_max must be positive");
  const std::size_t n = d.size();
  if (!(d.min() < 1.0 / static_cast<double>(n) - kDegenerateGap)) {
    throw Error(ErrorCode::DegenerateDistribution, "uniform distribution has no crossing");
  }
  const double uniform_slope = 1.0 - 1.0 / static_cast<double>(n);
  auto gap = [&](double w) { return mim(d, w) - w * uniform_slope; };

  const auto steps = static_cast<std::size_t>(std::ceil(search_max / kCrossingGridStep - 1e-9));
  double prev = 0.0;
  for (std::size_t k = 1; k <= steps; ++k) {
    const double w = std::min(search_max, kCrossingGridStep * static_cast<double>(k));
    if (gap(w) > 0.0) {
      // invariant: gap(lo) <= 0 < gap(hi)
      double lo = prev;
      double hi = w;
      while (hi - lo > kCrossingTolerance) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) > 0.0 ? hi : lo) = mid;
      }
      return {0.5 * (lo + hi), Provenance::crossing};
    }
    prev = w;
  }
  throw Error(ErrorCode::NoCrossing, "MIM stays below the uniform baseline on (0, " + std::to_string(search_max) + "]");
}

}  // namespace mim
