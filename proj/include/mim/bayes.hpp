#pragma once

// Bayes decision error for detecting a minority class among Gaussian hypotheses:
// exact error by quadrature, the Chernoff-style exponential bound (closed form for
// two equal-variance Gaussians, numerical for the minority-versus-mixture case),
// and the error of a plug-in rule designed with a misspecified prior.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "mim/error.hpp"
#include "mim/numerics.hpp"

namespace mim {

/// Interior margin used wherever the Chernoff parameter must stay inside (0, 1).
inline constexpr double kChernoffEpsilon = 1e-9;
/// Half-width of the integration window beyond the extreme means, in units of the largest sigma.
inline constexpr double kWindowSigmas = 10.0;
inline constexpr std::size_t kSimpsonPanels = std::size_t{1} << 14;
inline constexpr std::size_t kAlphaGridPoints = 512;

class GaussianHypothesis {
public:
  GaussianHypothesis(double mean, double sigma) : mean_(mean), sigma_(sigma) {
    if (!std::isfinite(mean) || !std::isfinite(sigma) || !(sigma > 0.0)) {
      throw Error(ErrorCode::OutOfRange, "Gaussian hypothesis needs finite mean and sigma > 0");
    }
  }

  double mean() const noexcept { return mean_; }
  double sigma() const noexcept { return sigma_; }

  double log_pdf(double x) const noexcept {
    const double z = (x - mean_) / sigma_;
    return -0.5 * z * z - std::log(sigma_) - 0.5 * std::log(2.0 * std::numbers::pi);
  }
  double pdf(double x) const noexcept { return std::exp(log_pdf(x)); }

private:
  double mean_;
  double sigma_;
};

/// M >= 2 classes with priors summing to one; `minority_index` names the class to detect.
class HypothesisEnsemble {
public:
  HypothesisEnsemble(std::vector<double> priors, std::vector<GaussianHypothesis> hypotheses,
                     std::size_t minority_index = 0)
      : priors_(std::move(priors)), hypotheses_(std::move(hypotheses)), minority_(minority_index) {
    if (priors_.size() < 2) throw Error(ErrorCode::TooFewEvents, "ensemble needs M >= 2 classes");
    if (priors_.size() != hypotheses_.size()) {
      throw Error(ErrorCode::ModelMismatch, "priors and hypotheses differ in length");
    }
    if (minority_ >= priors_.size()) throw Error(ErrorCode::IndexOutOfRange, "minority index");
    for (double w : priors_) {
      if (!(w > 0.0)) throw Error(ErrorCode::NonPositiveEntry, "class priors must be positive");
    }
    const double total = std::accumulate(priors_.begin(), priors_.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorCode::NotNormalized, "class priors must sum to 1");
  }

  std::size_t size() const noexcept { return priors_.size(); }
  std::size_t minority_index() const noexcept { return minority_; }
  double prior(std::size_t k) const { return priors_[k]; }
  const GaussianHypothesis& hypothesis(std::size_t k) const { return hypotheses_[k]; }
  double minority_prior() const { return priors_[minority_]; }
  const GaussianHypothesis& minority() const { return hypotheses_[minority_]; }

  /// ln sum_{k != minority} priors_k p_k(x), optionally divided by the total majority mass.
  double log_majority(double x, bool normalized = false) const {
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < size(); ++k) {
      if (k != minority_) peak = std::max(peak, std::log(priors_[k]) + hypotheses_[k].log_pdf(x));
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < size(); ++k) {
      if (k != minority_) acc += std::exp(std::log(priors_[k]) + hypotheses_[k].log_pdf(x) - peak);
    }
    const double lse = peak + std::log(acc);
    return normalized ? lse - std::log1p(-minority_prior()) : lse;
  }

  /// [min mean - 10 sigma_max, max mean + 10 sigma_max].
  std::pair<double, double> window() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sigma_max = 0.0;
    for (const auto& h : hypotheses_) {
      lo = std::min(lo, h.mean());
      hi = std::max(hi, h.mean());
      sigma_max = std::max(sigma_max, h.sigma());
    }
    return {lo - kWindowSigmas * sigma_max, hi + kWindowSigmas * sigma_max};
  }

private:
  std::vector<double> priors_;
  std::vector<GaussianHypothesis> hypotheses_;
  std::size_t minority_;
};

struct ChernoffExponent {
  double alpha;
  /// The unconstrained minimizer fell outside (0, 1) and alpha sits at the nearer margin.
  bool clamped;
};

namespace detail {
inline void require_open_unit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) throw Error(ErrorCode::OutOfRange, std::string(name) + " must lie in (0,1)");
}
}  // namespace detail

/// K(alpha) = alpha ln w0 + (1 - alpha) ln(1 - w0) - alpha (1 - alpha) beta.
inline double k_alpha(double alpha, double omega0, double beta) {
  detail::require_open_unit(alpha, "alpha");
  detail::require_open_unit(omega0, "omega0");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw Error(ErrorCode::OutOfRange, "beta must be finite and >= 0");
  return alpha * std::log(omega0) + (1.0 - alpha) * std::log1p(-omega0) - alpha * (1.0 - alpha) * beta;
}

/// Minimizer of K over (0, 1). K is a convex quadratic, so when the stationary point
/// 1/2 + (ln w1 - ln w0) / (2 beta) leaves the interval the constrained minimum is at
/// the nearer end, represented by epsilon or 1 - epsilon.
inline ChernoffExponent optimal_alpha_gaussian(double omega0, double beta) {
  detail::require_open_unit(omega0, "omega0");
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorCode::OutOfRange, "beta must be positive; K is linear when the means coincide");
  }
  const double stationary = 0.5 + (std::log1p(-omega0) - std::log(omega0)) / (2.0 * beta);
  if (stationary <= kChernoffEpsilon) return {kChernoffEpsilon, true};
  if (stationary >= 1.0 - kChernoffEpsilon) return {1.0 - kChernoffEpsilon, true};
  return {stationary, false};
}

struct ChernoffResult {
  double bound;
  double beta;
  ChernoffExponent exponent;
};

/// Closed-form Chernoff bound for two Gaussians sharing one sigma.
inline ChernoffResult chernoff_gaussian(double omega0, const GaussianHypothesis& h0, const GaussianHypothesis& h1) {
  detail::require_open_unit(omega0, "omega0");
  if (std::abs(h0.sigma() - h1.sigma()) > 1e-12 * std::max(h0.sigma(), h1.sigma())) {
    throw Error(ErrorCode::ModelMismatch, "closed-form bound needs equal sigmas");
  }
  const double delta = h0.mean() - h1.mean();
  const double beta = delta * delta / (2.0 * h0.sigma() * h0.sigma());
  ChernoffExponent exponent{};
  if (beta > 0.0) {
    exponent = optimal_alpha_gaussian(omega0, beta);
  } else {
    // K is linear in alpha with slope ln w0 - ln w1.
    exponent = {omega0 < 0.5 ? 1.0 - kChernoffEpsilon : kChernoffEpsilon, true};
  }
  return {std::exp(k_alpha(exponent.alpha, omega0, beta)), beta, exponent};
}

inline double chernoff_bound_gaussian(double omega0, const GaussianHypothesis& h0, const GaussianHypothesis& h1) {
  return chernoff_gaussian(omega0, h0, h1).bound;
}

/// Error probability of the rule "decide class 0 iff a0 p0(x) > (1 - a0) p1(x)" designed with
/// the assumed prior a0, when the true prior of class 0 is w0. With a0 == w0 this is the Bayes error.
inline double decision_error(double true_omega0, double assumed_omega0, const GaussianHypothesis& h0,
                             const GaussianHypothesis& h1) {
  detail::require_open_unit(true_omega0, "true omega0");
  detail::require_open_unit(assumed_omega0, "assumed omega0");
  const double log_odds = std::log(assumed_omega0) - std::log1p(-assumed_omega0);
  auto selector = [&](double x) { return log_odds + h0.log_pdf(x) - h1.log_pdf(x); };
  auto missed_minority = [&](double x) { return true_omega0 * h0.pdf(x); };
  auto false_alarm = [&](double x) { return (1.0 - true_omega0) * h1.pdf(x); };
  const double sigma_max = std::max(h0.sigma(), h1.sigma());
  const double lo = std::min(h0.mean(), h1.mean()) - kWindowSigmas * sigma_max;
  const double hi = std::max(h0.mean(), h1.mean()) + kWindowSigmas * sigma_max;
  return numerics::integrate_switching(selector, missed_minority, false_alarm, lo, hi);
}

/// Integral of min{w0 p0(x), w1 p1(x)}.
inline double bayes_error_oracle_binary(double omega0, const GaussianHypothesis& h0, const GaussianHypothesis& h1) {
  return decision_error(omega0, omega0, h0, h1);
}

/// Integral of min{w_m p_m(x), sum_{k != m} w_k p_k(x)} for minority class m.
inline double mary_error_oracle(const HypothesisEnsemble& e) {
  const double log_w0 = std::log(e.minority_prior());
  const auto& h0 = e.minority();
  auto selector = [&](double x) { return log_w0 + h0.log_pdf(x) - e.log_majority(x); };
  auto minority_term = [&](double x) { return std::exp(log_w0 + h0.log_pdf(x)); };
  auto majority_term = [&](double x) { return std::exp(e.log_majority(x)); };
  const auto [lo, hi] = e.window();
  return numerics::integrate_switching(selector, minority_term, majority_term, lo, hi);
}

struct MaryBound {
  double bound;
  double alpha;
};

/// min over alpha in (0,1) of w0^alpha (1-w0)^(1-alpha) * integral p0^alpha q^(1-alpha), where q is
/// the prior-weighted mixture of the majority classes. The integral is evaluated by composite
/// Simpson; alpha is scanned on a 512-point grid and refined by golden-section search.
inline MaryBound mary_error_bound_detail(const HypothesisEnsemble& e) {
  const auto [lo, hi] = e.window();
  const numerics::SimpsonGrid grid(lo, hi, kSimpsonPanels);
  const std::size_t nodes = grid.nodes.size();
  std::vector<double> log_minority(nodes);
  std::vector<double> log_mixture(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    log_minority[i] = e.minority().log_pdf(grid.nodes[i]);
    log_mixture[i] = e.log_majority(grid.nodes[i], true);
  }
  const double log_w0 = std::log(e.minority_prior());
  const double log_w1 = std::log1p(-e.minority_prior());

  auto objective = [&](double alpha) {
    double integral = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
      integral += grid.weights[i] * std::exp(alpha * log_minority[i] + (1.0 - alpha) * log_mixture[i]);
    }
    return std::exp(alpha * log_w0 + (1.0 - alpha) * log_w1) * integral;
  };

  const double a_lo = kChernoffEpsilon;
  const double a_hi = 1.0 - kChernoffEpsilon;
  const double step = (a_hi - a_lo) / static_cast<double>(kAlphaGridPoints - 1);
  std::size_t best_k = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < kAlphaGridPoints; ++k) {
    const double alpha = k + 1 == kAlphaGridPoints ? a_hi : a_lo + step * static_cast<double>(k);
    const double value = objective(alpha);
    if (value < best_value) {
      best_value = value;
      best_k = k;
    }
  }
  MaryBound best{best_value, best_k + 1 == kAlphaGridPoints ? a_hi : a_lo + step * static_cast<double>(best_k)};
  const double left = best_k == 0 ? a_lo : a_lo + step * static_cast<double>(best_k - 1);
  const double right = best_k + 1 >= kAlphaGridPoints ? a_hi : std::min(a_hi, a_lo + step * static_cast<double>(best_k + 1));
  const auto refined = numerics::golden_section_minimize(objective, left, right, 1e-6);
  if (refined.value < best.bound) best = {refined.value, refined.x};
  return best;
}

inline double mary_error_bound(const HypothesisEnsemble& e) { return mary_error_bound_detail(e).bound; }

}  // namespace mim
