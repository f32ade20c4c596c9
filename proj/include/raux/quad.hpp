#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "raux/complexutil.hpp"

namespace raux::quad {

using Kernel = std::function<Complex(const Complex&)>;

// Result of one quadrature call. abs_err is an upper estimate assembled from
// nested-rule differences, truncation bounds and the binary64 conditioning
// floor; truncated_at is set iff a terminal ray was integrated (the ray
// parameter at which the tail was cut).
struct EvalResult {
  Complex value{0.0, 0.0};
  double abs_err = 0.0;
  std::int64_t n_evals = 0;
  std::optional<double> truncated_at;
};

// Certified tail decay along a ray, supplied by the caller.
//   gaussian(c):     |f(z0 + u d)| eventually ~ e^{-c u^2}
//   exponential(c):  |f(z0 + u d)| eventually ~ e^{-c u}
//   power_oscillatory(alpha): |f| ~ u^alpha with oscillation, alpha in (-1,0);
//   admitted only by the oscillatory-tail routine.
struct TailEnvelope {
  enum class Kind { gaussian, exponential, power_oscillatory };
  Kind kind = Kind::exponential;
  double rate = 1.0;   // c > 0 for gaussian/exponential
  double alpha = 0.0;  // exponent for power_oscillatory

  static TailEnvelope gaussian(double c) { return {Kind::gaussian, c, 0.0}; }
  static TailEnvelope exponential(double c) { return {Kind::exponential, c, 0.0}; }
  static TailEnvelope power_oscillatory(double a) {
    return {Kind::power_oscillatory, 1.0, a};
  }
};

// Declares an integrable algebraic endpoint: f(z) ~ C (z - z0)^p near the
// start of the segment/ray, Re p > -1. The exponent may be complex; its
// imaginary part captures oscillatory weights like y^{it}.
struct PowerSingularity {
  Complex exponent{0.0, 0.0};
};

// Polyline contour with an optional terminal decaying ray.
struct ContourPath {
  std::vector<Complex> nodes;  // >= 1, consecutive nodes distinct
  struct Ray {
    Complex direction{1.0, 0.0};  // unit vector
  };
  std::optional<Ray> terminal_ray;

  void validate() const;
};

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kAbsFloor = 1e-300;

// Adaptive Gauss-Kronrod 7/15 over the straight segment [z0, z1].
// Relative tolerance tol with absolute floor; an integrable endpoint
// singularity at z0 may be declared and is handled by geometrically graded
// panels (ratio 1/4, depth <= 60) plus an analytic stub for the innermost
// piece. Throws accuracy_error when subdivision is exhausted far from target.
EvalResult integrate_segment(const Kernel& f, Complex z0, Complex z1,
                             double tol = kDefaultTol,
                             std::optional<PowerSingularity> start_singularity = {});

// Integral from z0 to infinity along the unit direction d. The envelope
// certifies eventual decay (gaussian or exponential kinds only) and is used
// to bound the discarded tail; measured magnitudes anchor the bound. A
// measured value more than 10x above the envelope's prediction after decay
// has set in raises contract_error.
EvalResult integrate_ray(const Kernel& f, Complex z0, Complex direction,
                         TailEnvelope envelope, double tol = kDefaultTol,
                         std::optional<PowerSingularity> origin_singularity = {});

// Conditionally convergent tail of a real-parameter kernel with asymptotically
// periodic phase and power-decay modulus. Partial integrals between cut points
// x0 + k*period_hint are summed and accelerated by iterated averaging of the
// partial-sum sequence (>= 6 levels); the error estimate comes from the last
// level's differences. Non-shrinking differences raise accuracy_error.
EvalResult integrate_oscillatory_tail(const std::function<Complex(double)>& f,
                                      double x0, double period_hint,
                                      double tol = kDefaultTol);

// Straight segments through path.nodes, then the terminal ray if present.
EvalResult integrate_path(const Kernel& f, const ContourPath& path,
                          double tol = kDefaultTol,
                          std::optional<PowerSingularity> start_singularity = {},
                          std::optional<TailEnvelope> ray_envelope = {});

}  // namespace raux::quad
