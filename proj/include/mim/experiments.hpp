#pragma once

// Sweep builders behind the command-line tool: MIM against the coefficient, MIM of a
// binary source against its minority mass, the figure presets, and the prior-mismatch
// comparison between the worst-case prior and the logarithmic-mean estimate.

#include <cstddef>
#include <string>
#include <vector>

#include "mim/bayes.hpp"
#include "mim/coefficient.hpp"
#include "mim/distribution.hpp"
#include "mim/measures.hpp"
#include "mim/prior.hpp"
#include "mim/sweep_table.hpp"

namespace mim {

inline std::string join_numbers(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  return out;
}

/// Columns [omega, mim, mim_uniform, lower_bound, asymptote].
inline SweepTable sweep_omega(const Distribution& d, double omega_min, double omega_max, double step) {
  if (!(omega_min >= 0.0)) throw Error(ErrorCode::OutOfRange, "omega range must start at >= 0");
  const auto grid = linear_grid(omega_min, omega_max, step);
  const Distribution u = uniform(d.size());
  SweepTable table({"omega", "mim", "mim_uniform", "lower_bound", "asymptote"});
  table.set_meta("sweep", "omega");
  table.set_meta("dist", join_numbers(d.probs()));
  table.set_meta("range", format_number(omega_min) + ":" + format_number(omega_max) + ":" + format_number(step));
  for (double w : grid) {
    table.add_row({w, mim(d, w), mim(u, w), mim_lower_bound(d, w), mim_asymptote(d, w)});
  }
  return table;
}

/// Columns [p0, mim_bernoulli, mim_uniform_binary].
inline SweepTable sweep_p(ImportanceCoefficient omega, double p_min, double p_max, double step) {
  if (!(p_min > 0.0 && p_max < 1.0)) throw Error(ErrorCode::OutOfRange, "p range must lie inside (0,1)");
  const auto grid = linear_grid(p_min, p_max, step);
  const double baseline = mim(uniform(2), omega);
  SweepTable table({"p0", "mim_bernoulli", "mim_uniform_binary"});
  table.set_meta("sweep", "p0");
  table.set_meta("omega", format_number(omega.value()));
  table.set_meta("range", format_number(p_min) + ":" + format_number(p_max) + ":" + format_number(step));
  for (double p : grid) table.add_row({p, mim(bernoulli(p), omega), baseline});
  return table;
}

/// The five-point example distribution; its printed entries sum to 1.0001, hence normalized.
inline Distribution five_point_example() {
  return make_distribution({0.0925, 0.3156, 0.3887, 0.1484, 0.0549}, Normalize::on);
}

/// MIM of Bernoulli(0.1) against the binary uniform distribution for w in [0, 12].
inline SweepTable figure_1a() {
  const Distribution d = bernoulli(0.1);
  SweepTable table = sweep_omega(d, 0.0, 12.0, 0.05);
  table.set_meta("figure", "1a");
  table.set_meta("crossing", format_number(crossing_coefficient(d, 12.0).value()));
  return table;
}

/// MIM of Bernoulli(p0) for p0 in [0.01, 0.99] at w = 1 and w = 20, with the uniform baselines.
inline SweepTable figure_1b() {
  const auto grid = linear_grid(0.01, 0.99, 0.01);
  const ImportanceCoefficient small{1.0};
  const ImportanceCoefficient large{20.0};
  const double base_small = mim(uniform(2), small);
  const double base_large = mim(uniform(2), large);
  SweepTable table({"p0", "mim_bernoulli_omega1", "mim_uniform_omega1", "mim_bernoulli_omega20", "mim_uniform_omega20"});
  table.set_meta("figure", "1b");
  table.set_meta("range", "0.01:0.99:0.01");
  for (double p : grid) {
    const Distribution d = bernoulli(p);
    table.add_row({p, mim(d, small), base_small, mim(d, large), base_large});
  }
  return table;
}

/// MIM of the five-point example against uniform(5) for w in [0, 40], marking the Theorem 1 threshold.
inline SweepTable figure_3() {
  const Distribution d = five_point_example();
  SweepTable table = sweep_omega(d, 0.0, 40.0, 0.1);
  table.set_meta("figure", "3");
  table.set_meta("theorem1_threshold", format_number(theorem1_threshold(d).threshold));
  return table;
}

enum class GridSpacing { log, linear };

/// For true minority priors spread over [lower, upper], the error of three plug-in rules:
/// designed with the worst-case prior `upper`, with the logarithmic-mean estimate, and with
/// the true prior. Columns [omega_true, err_worstcase, err_mim, err_ideal].
inline SweepTable compare_worstcase(const PriorBounds& bounds, const GaussianHypothesis& h0,
                                    const GaussianHypothesis& h1, std::size_t points = 101,
                                    GridSpacing spacing = GridSpacing::log) {
  if (bounds.degenerate()) throw Error(ErrorCode::DegenerateInterval, "comparison needs lower < upper");
  if (points < 2) throw Error(ErrorCode::OutOfRange, "comparison needs at least 2 grid points");
  const double p_hat = estimate_prior(bounds);
  const double worst = bounds.upper();
  const auto grid = spacing == GridSpacing::log
                        ? log_grid(bounds.lower(), bounds.upper(), points)
                        : linear_grid(bounds.lower(), bounds.upper(),
                                      (bounds.upper() - bounds.lower()) / static_cast<double>(points - 1));
  SweepTable table({"omega_true", "err_worstcase", "err_mim", "err_ideal"});
  table.set_meta("experiment", "compare-worstcase");
  table.set_meta("bounds", format_number(bounds.lower()) + ":" + format_number(bounds.upper()));
  table.set_meta("h0", format_number(h0.mean()) + ":" + format_number(h0.sigma()));
  table.set_meta("h1", format_number(h1.mean()) + ":" + format_number(h1.sigma()));
  table.set_meta("grid", spacing == GridSpacing::log ? "log" : "linear");
  table.set_meta("p_hat", format_number(p_hat));
  for (double w : grid) {
    table.add_row({w, decision_error(w, worst, h0, h1), decision_error(w, p_hat, h0, h1),
                   decision_error(w, w, h0, h1)});
  }
  return table;
}

struct ExcessError {
  double worstcase;
  double mim;
};

/// Grid means of err_worstcase - err_ideal and err_mim - err_ideal.
inline ExcessError mean_excess_error(const SweepTable& comparison) {
  const auto worst = comparison.column("err_worstcase");
  const auto est = comparison.column("err_mim");
  const auto ideal = comparison.column("err_ideal");
  ExcessError out{0.0, 0.0};
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    out.worstcase += worst[i] - ideal[i];
    out.mim += est[i] - ideal[i];
  }
  const auto n = static_cast<double>(ideal.size());
  return {out.worstcase / n, out.mim / n};
}

}  // namespace mim
