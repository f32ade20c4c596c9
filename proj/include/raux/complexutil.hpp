#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace raux {

using Complex = std::complex<double>;

// Input outside an operation's admissible domain (poles, wrong half-plane, ...).
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A decay contract supplied by the caller was measurably violated.
class contract_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Requested accuracy could not be reached; carries the best estimate found.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& msg, Complex best, double achieved)
      : std::runtime_error(msg), best_estimate(best), achieved_err(achieved) {}
  Complex best_estimate{0.0, 0.0};
  double achieved_err = 0.0;
};

namespace constants {
inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double sqrt2 = 1.41421356237309504880168872420969808;
// omega = e^{i pi/4}, the eighth root of unity used throughout.
inline constexpr Complex omega{0.70710678118654752440084436210484904,
                               0.70710678118654752440084436210484904};
inline constexpr Complex omega_bar{0.70710678118654752440084436210484904,
                                   -0.70710678118654752440084436210484904};
inline constexpr Complex i_unit{0.0, 1.0};
}  // namespace constants

// exp(w) with hard underflow: real part below -700 gives exact 0.
inline Complex cexp_safe(const Complex& w) {
  if (w.real() < -700.0) return {0.0, 0.0};
  return std::exp(w);
}

// e^w - 1, stable for small |w|.
inline Complex cexpm1(const Complex& w) {
  const double a = w.real();
  const double b = w.imag();
  const double em = std::expm1(a);
  const double sb = std::sin(0.5 * b);
  // e^a cos b - 1 = expm1(a) cos(b) - 2 sin^2(b/2)
  const double re = em * std::cos(b) - 2.0 * sb * sb;
  const double im = (em + 1.0) * std::sin(b);
  return {re, im};
}

// log(1 + w), stable for small |w|.
inline Complex clog1p(const Complex& w) {
  const double a = w.real();
  const double b = w.imag();
  if (std::abs(a) > 0.25 || std::abs(b) > 0.25) return std::log(1.0 + w);
  const double re = 0.5 * std::log1p(2.0 * a + a * a + b * b);
  const double im = std::atan2(b, 1.0 + a);
  return {re, im};
}

inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace raux
