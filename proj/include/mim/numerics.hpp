#pragma once

// Scalar numerical primitives shared by the measure, coefficient and decision modules.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace mim::numerics {

/// log(sum_i exp(terms[i])) without overflow. Returns -inf for an empty span.
inline double log_sum_exp(std::span<const double> terms) {
  if (terms.empty()) return -std::numeric_limits<double>::infinity();
  const double peak = *std::max_element(terms.begin(), terms.end());
  if (!std::isfinite(peak)) return peak;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - peak);
  return peak + std::log(acc);
}

/// log(1 + exp(t)), stable on both tails.
inline double log1p_exp(double t) {
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

struct Minimum {
  double x;
  double value;
};

/// Golden-section search for a minimum of a unimodal f on [lo, hi].
template <typename F>
Minimum golden_section_minimize(F&& f, double lo, double hi, double tol = 1e-10, int max_iter = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  const double x = 0.5 * (lo + hi);
  Minimum best{x, f(x)};
  if (fc < best.value) best = {c, fc};
  if (fd < best.value) best = {d, fd};
  return best;
}

/// Bisection on a bracket with f(lo) and f(hi) of opposite sign (or one of them zero).
template <typename F>
double bisect_root(F&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Composite Simpson rule on [a, b] with `panels` (even) subintervals.
template <typename F>
double simpson(F&& f, double a, double b, std::size_t panels) {
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / static_cast<double>(panels);
  double acc = f(a) + f(b);
  for (std::size_t i = 1; i < panels; ++i) {
    const double x = a + h * static_cast<double>(i);
    acc += (i % 2 == 1 ? 4.0 : 2.0) * f(x);
  }
  return acc * h / 3.0;
}

/// Uniform Simpson nodes and weights, for integrands evaluated many times on one grid.
struct SimpsonGrid {
  std::vector<double> nodes;
  std::vector<double> weights;

  SimpsonGrid(double a, double b, std::size_t panels) {
    if (panels % 2 != 0) ++panels;
    const double h = (b - a) / static_cast<double>(panels);
    nodes.resize(panels + 1);
    weights.resize(panels + 1);
    for (std::size_t i = 0; i <= panels; ++i) {
      nodes[i] = a + h * static_cast<double>(i);
      const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      weights[i] = w * h / 3.0;
    }
  }
};

/// Integral of g(x) over [a, b] where g switches between two smooth branches
/// according to the sign of `selector`: `negative_branch` where selector < 0 and
/// `positive_branch` elsewhere. Sign changes of the selector are bracketed on a
/// uniform scan of `scan_cells` cells and refined by bisection, then each smooth
/// piece is integrated by adaptive Gauss-Kronrod.
template <typename Selector, typename Neg, typename Pos>
double integrate_switching(Selector&& selector, Neg&& negative_branch, Pos&& positive_branch,
                           double a, double b, std::size_t scan_cells = 1u << 14,
                           double tol = 1e-12) {
  using boost::math::quadrature::gauss_kronrod;
  std::vector<double> breaks{a};
  const double h = (b - a) / static_cast<double>(scan_cells);
  double prev_x = a;
  bool prev_neg = selector(a) < 0.0;
  for (std::size_t i = 1; i <= scan_cells; ++i) {
    const double x = (i == scan_cells) ? b : a + h * static_cast<double>(i);
    const bool neg = selector(x) < 0.0;
    if (neg != prev_neg) {
      breaks.push_back(bisect_root(selector, prev_x, x, 1e-15 * std::max(1.0, std::abs(x))));
    }
    prev_x = x;
    prev_neg = neg;
  }
  breaks.push_back(b);

  double total = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double lo = breaks[k];
    const double hi = breaks[k + 1];
    if (hi <= lo) continue;
    const bool neg = selector(0.5 * (lo + hi)) < 0.0;
    if (neg) {
      total += gauss_kronrod<double, 61>::integrate(negative_branch, lo, hi, 15, tol);
    } else {
      total += gauss_kronrod<double, 61>::integrate(positive_branch, lo, hi, 15, tol);
    }
  }
  return total;
}

}  // namespace mim::numerics
