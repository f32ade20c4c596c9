#pragma once

// 50-digit complex arithmetic used where binary64 cancellation is fatal:
// the alternating Hermite power series and test-side reference values.

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "raux/complexutil.hpp"

namespace raux::detail {

using mreal = boost::multiprecision::cpp_bin_float_50;
using mcomplex = boost::multiprecision::cpp_complex_50;

inline mcomplex to_mp(const Complex& z) { return {mreal(z.real()), mreal(z.imag())}; }

inline Complex to_double(const mcomplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline const mreal& mp_pi() {
  static const mreal v = boost::math::constants::pi<mreal>();
  return v;
}

// Principal log Gamma: argument shifted to Re >= 40, then the Stirling series
// with Bernoulli coefficients through B_48. Accurate well below 1e-45 there.
inline mcomplex mp_log_gamma(mcomplex z) {
  static const auto coeff = [] {
    std::vector<mreal> c(24);
    for (int j = 1; j <= 24; ++j) {
      c[j - 1] = boost::math::bernoulli_b2n<mreal>(j) /
                 (mreal(2 * j) * mreal(2 * j - 1));
    }
    return c;
  }();

  mcomplex shift{0, 0};
  while (z.real() < 40) {
    shift += log(z);
    z += 1;
  }
  const mcomplex lz = log(z);
  mcomplex s = (z - mcomplex(mreal(1) / 2, 0)) * lz - z +
               log(2 * mp_pi()) / 2;
  const mcomplex w2 = mcomplex(1, 0) / (z * z);
  mcomplex wp = mcomplex(1, 0) / z;
  for (const auto& c : coeff) {
    s += c * wp;
    wp *= w2;
  }
  return s - shift;
}

inline mcomplex mp_gamma(const mcomplex& z) { return exp(mp_log_gamma(z)); }

}  // namespace raux::detail
