#pragma once

// Message importance measure (MIM) and the reference entropies it is compared against.
// Natural logarithms throughout; all exponential sums are evaluated in the log domain.

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "mim/distribution.hpp"
#include "mim/error.hpp"
#include "mim/numerics.hpp"

namespace mim {

enum class Provenance { user, theorem1, theorem3, crossing, balancing };

constexpr std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::user: return "user";
    case Provenance::theorem1: return "theorem1";
    case Provenance::theorem3: return "theorem3";
    case Provenance::crossing: return "crossing";
    case Provenance::balancing: return "balancing";
  }
  return "unknown";
}

/// The importance coefficient: a finite, non-negative weight on small-probability events.
/// Implicitly constructible from a plain double (provenance `user`).
class ImportanceCoefficient {
public:
  ImportanceCoefficient(double value, Provenance provenance = Provenance::user)  // NOLINT(google-explicit-constructor)
      : value_(value), provenance_(provenance) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
      throw Error(ErrorCode::OutOfRange, "importance coefficient must be finite and >= 0, got " + std::to_string(value));
    }
  }

  double value() const noexcept { return value_; }
  Provenance provenance() const noexcept { return provenance_; }

private:
  double value_;
  Provenance provenance_;
};

/// Order of a Renyi entropy; the order-1 limit is `shannon`.
class RenyiOrder {
public:
  explicit RenyiOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
      throw Error(ErrorCode::OutOfRange, "Renyi order must be positive");
    }
    if (std::abs(alpha - 1.0) < 1e-9) {
      throw Error(ErrorCode::OutOfRange, "Renyi order 1 is the Shannon limit; call shannon()");
    }
  }

  double value() const noexcept { return alpha_; }

private:
  double alpha_;
};

/// L(p, w) = ln sum_i p_i exp{w (1 - p_i)}.
inline double mim(const Distribution& d, ImportanceCoefficient w) {
  const double omega = w.value();
  if (omega == 0.0) return 0.0;  // ln sum_i p_i
  std::vector<double> terms;
  terms.reserve(d.size());
  for (double p : d) terms.push_back(std::log(p) + omega * (1.0 - p));
  // Mathematically >= 0; clamps rounding noise when the sum is 1 to within an ulp.
  return std::max(0.0, numerics::log_sum_exp(terms));
}

/// Shannon entropy in nats.
inline double shannon(const Distribution& d) {
  double h = 0.0;
  for (double p : d) h -= p * std::log(p);
  return h;
}

inline double renyi(const Distribution& d, RenyiOrder order) {
  const double alpha = order.value();
  std::vector<double> terms;
  terms.reserve(d.size());
  for (double p : d) terms.push_back(alpha * std::log(p));
  return numerics::log_sum_exp(terms) / (1.0 - alpha);
}

/// w (1 - sum_i p_i^2); never exceeds mim(d, w), with equality exactly on the uniform distribution.
inline double mim_lower_bound(const Distribution& d, ImportanceCoefficient w) {
  double collision = 0.0;
  for (double p : d) collision += p * p;
  return w.value() * (1.0 - collision);
}

/// Large-coefficient asymptote w (1 - p_min) + ln p_min.
inline double mim_asymptote(const Distribution& d, ImportanceCoefficient w) {
  const double p_min = d.min();
  return w.value() * (1.0 - p_min) + std::log(p_min);
}

/// ln(1 + p e^{w(1-2p)}) + w p for a binary source with minority mass p in (0, 1/2).
/// Differs from mim(bernoulli(p), w) by at most |ln(1 - p)|.
inline double binary_mim_approx(double p, ImportanceCoefficient w) {
  if (!(p > 0.0 && p < 0.5)) {
    throw Error(ErrorCode::OutOfRange, "binary approximation needs 0 < p < 0.5, got " + std::to_string(p));
  }
  const double omega = w.value();
  return numerics::log1p_exp(std::log(p) + omega * (1.0 - 2.0 * p)) + omega * p;
}

/// f(x) = x e^{w(1-x)}; its maximum over (0, 1) sits at x = 1/w when w > 1.
inline double importance_weight(double x, ImportanceCoefficient w) {
  if (!(x > 0.0 && x < 1.0)) {
    throw Error(ErrorCode::OutOfRange, "importance weight needs 0 < x < 1, got " + std::to_string(x));
  }
  return x * std::exp(w.value() * (1.0 - x));
}

}  // namespace mim
