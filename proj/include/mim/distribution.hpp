#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mim/error.hpp"

namespace mim {

/// Absolute tolerance on the sum of a probability vector.
inline constexpr double kNormalizationTolerance = 1e-9;

enum class Normalize : bool { off = false, on = true };

/// Finite probability distribution with strictly positive entries and at least two events.
/// Immutable once built; every structural operation returns a new value.
class Distribution {
public:
  explicit Distribution(std::vector<double> values, Normalize normalize = Normalize::off)
      : probs_(std::move(values)) {
    if (probs_.size() < 2) {
      throw Error(ErrorCode::TooFewEvents,
                  "a distribution needs at least 2 events, got " + std::to_string(probs_.size()));
    }
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      // !(x > 0) also rejects NaN
      if (!(probs_[i] > 0.0)) {
        throw Error(ErrorCode::NonPositiveEntry,
                    "entry " + std::to_string(i) + " is " + std::to_string(probs_[i]));
      }
    }
    const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (normalize == Normalize::on) {
      for (double& p : probs_) p /= total;
    } else if (std::abs(total - 1.0) > kNormalizationTolerance) {
      throw Error(ErrorCode::NotNormalized, "entries sum to " + std::to_string(total));
    }
  }

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  double min() const noexcept { return *std::min_element(probs_.begin(), probs_.end()); }
  double max() const noexcept { return *std::max_element(probs_.begin(), probs_.end()); }

  auto begin() const noexcept { return probs_.begin(); }
  auto end() const noexcept { return probs_.end(); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

private:
  std::vector<double> probs_;
};

inline Distribution make_distribution(std::vector<double> values, Normalize normalize = Normalize::off) {
  return Distribution(std::move(values), normalize);
}

inline Distribution uniform(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::TooFewEvents, "uniform needs n >= 2");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

/// Two-event distribution (p, 1 - p).
inline Distribution bernoulli(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::OutOfRange, "bernoulli parameter must lie in (0,1), got " + std::to_string(p));
  }
  return Distribution({p, 1.0 - p});
}

/// Replaces event i by two children (fraction * p_i, (1 - fraction) * p_i) at positions i, i+1.
inline Distribution split_event(const Distribution& d, std::size_t i, double fraction) {
  if (i >= d.size()) throw Error(ErrorCode::IndexOutOfRange, "split index " + std::to_string(i));
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw Error(ErrorCode::OutOfRange, "split fraction must lie in (0,1)");
  }
  std::vector<double> out;
  out.reserve(d.size() + 1);
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k == i) {
      out.push_back(fraction * d[k]);
      out.push_back(d[k] - fraction * d[k]);
    } else {
      out.push_back(d[k]);
    }
  }
  return Distribution(std::move(out));
}

/// Replaces events i and j by a single event of mass p_i + p_j placed at min(i, j).
inline Distribution merge_events(const Distribution& d, std::size_t i, std::size_t j) {
  if (i >= d.size() || j >= d.size() || i == j) {
    throw Error(ErrorCode::IndexOutOfRange,
                "merge needs two distinct valid indices, got " + std::to_string(i) + "," + std::to_string(j));
  }
  if (d.size() == 2) throw Error(ErrorCode::TooFewEvents, "merging would leave a single event");
  const std::size_t keep = std::min(i, j);
  const std::size_t drop = std::max(i, j);
  std::vector<double> out;
  out.reserve(d.size() - 1);
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k == keep) {
      out.push_back(d[i] + d[j]);
    } else if (k != drop) {
      out.push_back(d[k]);
    }
  }
  return Distribution(std::move(out));
}

/// Joint distribution of two independent sources, row-major: entry (i, j) at i * m + j.
inline Distribution product(const Distribution& d, const Distribution& q) {
  std::vector<double> out;
  out.reserve(d.size() * q.size());
  for (double p : d) {
    for (double r : q) out.push_back(p * r);
  }
  return Distribution(std::move(out));
}

/// Convex combination lambda * d + (1 - lambda) * q of two distributions over the same events.
inline Distribution mixture(const Distribution& d, const Distribution& q, double lambda) {
  if (d.size() != q.size()) throw Error(ErrorCode::IndexOutOfRange, "mixture needs equal event counts");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error(ErrorCode::OutOfRange, "mixture weight outside [0,1]");
  std::vector<double> out(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) out[k] = lambda * d[k] + (1.0 - lambda) * q[k];
  return Distribution(std::move(out));
}

}  // namespace mim
