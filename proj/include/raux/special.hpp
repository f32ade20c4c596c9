#pragma once

#include <functional>

#include "raux/complexutil.hpp"

namespace raux::special {

// Principal-branch log Gamma (continuous off the cut (-inf,0], real on the
// positive reals). exp(log_gamma(z)) is accurate to ~1e-14 relative for
// Re z in [-10,30], |Im z| <= 60. Nonpositive-integer z raises domain_error.
Complex log_gamma(const Complex& z);

// chi(s) = (2 pi)^s / (2 Gamma(s) cos(pi s / 2)); satisfies chi(s) chi(1-s) = 1.
// Computed in log space for Re s >= 1/2 and as 1/chi(1-s) otherwise. Input on
// a pole (odd integers s >= 1) raises domain_error.
Complex chi(const Complex& s);

// Riemann-Siegel theta: the continuous branch of -arg chi(1/2+it)/2 anchored
// at theta(0) = 0, computed directly from log_gamma:
//   theta(t) = Im log_gamma(1/4 + it/2) - (t/2) log pi.
double theta(double t);

// Hermite function H_nu(z), Lebedev normalization. Power series (summed in
// 50-digit arithmetic; the terms cancel catastrophically in binary64) for
// |2z| <= 20, Mellin-integral form beyond (requires Re nu < 0 there).
// Nonnegative integer nu is rejected: that case degenerates to the Hermite
// polynomials, which this library never needs.
Complex hermite_h(const Complex& nu, const Complex& z);

// Reusable evaluator with the nu-dependent Gamma seeds cached; what
// hermite_h(nu, .) uses internally.
std::function<Complex(const Complex&)> hermite_evaluator(const Complex& nu);

// Series route only / integral route only, exposed for cross-validation.
Complex hermite_h_series(const Complex& nu, const Complex& z);
Complex hermite_h_integral(const Complex& nu, const Complex& z);

}  // namespace raux::special
