#include "raux/special.hpp"

#include <cmath>
#include <memory>

#include "raux/detail/mpcomplex.hpp"
#include "raux/quad.hpp"

namespace raux::special {

namespace {

using constants::pi;

// B_{2j} / (2j (2j-1)) for the binary64 Stirling series.
const double kStirling[10] = {
    1.0 / 12.0,           -1.0 / 360.0,         1.0 / 1260.0,
    -1.0 / 1680.0,        1.0 / 1188.0,         -691.0 / 360360.0,
    1.0 / 156.0,          -3617.0 / 122400.0,   43867.0 / 244188.0,
    -174611.0 / 125400.0};

Complex stirling(const Complex& w) {
  const Complex lw = std::log(w);
  Complex s = (w - 0.5) * lw - w + 0.91893853320467274178032973640562;  // log(2 pi)/2
  const Complex w2 = 1.0 / (w * w);
  Complex wp = 1.0 / w;
  for (double c : kStirling) {
    s += c * wp;
    wp *= w2;
  }
  return s;
}

bool near_nonpositive_integer(const Complex& z, double tol = 1e-12) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

bool near_nonnegative_integer(const Complex& z, double tol = 1e-12) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = std::round(z.real());
  return r >= 0.0 && std::abs(z.real() - r) <= tol;
}

struct HermiteSeeds {
  detail::mcomplex gamma_even;  // Gamma(-nu/2)
  detail::mcomplex gamma_odd;   // Gamma((1-nu)/2)
  detail::mcomplex half_inv_gamma;  // 1 / (2 Gamma(-nu))
};

Complex hermite_series_impl(const HermiteSeeds& seeds, const Complex& nu,
                            const Complex& z) {
  using detail::mcomplex;
  const mcomplex mnu = detail::to_mp(nu);
  const mcomplex two_z = detail::to_mp(2.0 * z);
  const mcomplex w = two_z * two_z;

  mcomplex even = seeds.gamma_even;
  mcomplex odd = seeds.gamma_odd * two_z;
  mcomplex sum = even - odd;
  for (int k = 0; k < 800; ++k) {
    const auto dk = static_cast<double>(2 * k);
    even *= (mcomplex(k, 0) - mnu / 2) * w / ((dk + 1.0) * (dk + 2.0));
    odd *= (mcomplex(k, 0) + (mcomplex(1, 0) - mnu) / 2) * w /
           ((dk + 2.0) * (dk + 3.0));
    sum += even - odd;
    if (k >= 4 && abs(even) + abs(odd) <= 1e-40 * abs(sum)) break;
  }
  return detail::to_double(sum * seeds.half_inv_gamma);
}

// H_nu(z) = (1/Gamma(-nu)) int_0^inf u^{-nu-1} e^{-u^2 - 2zu} du, Re nu < 0.
Complex hermite_integral_impl(const Complex& nu, const Complex& z) {
  const Complex p = -nu - 1.0;
  auto kern = [&](const Complex& u) {
    return cexp_safe(p * std::log(u) - u * u - 2.0 * z * u);
  };
  const double peak = std::max(1.0, -z.real());
  auto seg = quad::integrate_segment(kern, Complex(0.0, 0.0),
                                     Complex(peak + 1.0, 0.0), 1e-12,
                                     quad::PowerSingularity{p});
  auto ray = quad::integrate_ray(kern, Complex(peak + 1.0, 0.0),
                                 Complex(1.0, 0.0),
                                 quad::TailEnvelope::gaussian(1.0), 1e-12);
  const Complex pref = cexp_safe(-log_gamma(-nu));
  return pref * (seg.value + ray.value);
}

}  // namespace

Complex log_gamma(const Complex& z) {
  if (!is_finite(z)) throw domain_error("log_gamma: non-finite argument");
  if (near_nonpositive_integer(z)) {
    throw domain_error("log_gamma: pole of Gamma at z = " +
                       std::to_string(std::lround(z.real())));
  }
  Complex u = z;
  Complex shift{0.0, 0.0};
  while (u.real() < 12.0) {
    shift += std::log(u);
    u += 1.0;
  }
  return stirling(u) - shift;
}

Complex chi(const Complex& s) {
  if (!is_finite(s)) throw domain_error("chi: non-finite argument");
  if (s.real() < 0.5) return 1.0 / chi(1.0 - s);

  // log(2 cos(pi s/2)) via the exponential that stays bounded in the
  // relevant half-plane.
  Complex log2cos;
  if (s.imag() >= 0.0) {
    const Complex w = cexp_safe(constants::i_unit * pi * s);
    if (std::abs(1.0 + w) < 1e-14)
      throw domain_error("chi: pole at s near an odd integer");
    log2cos = -constants::i_unit * pi * s / 2.0 + clog1p(w);
  } else {
    const Complex w = cexp_safe(-constants::i_unit * pi * s);
    if (std::abs(1.0 + w) < 1e-14)
      throw domain_error("chi: pole at s near an odd integer");
    log2cos = constants::i_unit * pi * s / 2.0 + clog1p(w);
  }
  const double log2pi = 1.8378770664093454835606594728112353;
  return cexp_safe(s * log2pi - log_gamma(s) - log2cos);
}

double theta(double t) {
  if (!std::isfinite(t)) throw domain_error("theta: non-finite argument");
  const double logpi = 1.1447298858494001741434273513531;
  return log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * logpi;
}

std::function<Complex(const Complex&)> hermite_evaluator(const Complex& nu) {
  if (near_nonnegative_integer(nu)) {
    throw domain_error(
        "hermite_h: nonnegative integer order reduces to Hermite polynomials "
        "(unsupported)");
  }
  using detail::mcomplex;
  const mcomplex mnu = detail::to_mp(nu);
  auto seeds = std::make_shared<HermiteSeeds>();
  seeds->gamma_even = detail::mp_gamma(-mnu / 2);
  seeds->gamma_odd = detail::mp_gamma((mcomplex(1, 0) - mnu) / 2);
  seeds->half_inv_gamma = exp(-detail::mp_log_gamma(-mnu)) / 2;

  return [seeds, nu](const Complex& z) -> Complex {
    if (std::abs(2.0 * z) <= 20.0) return hermite_series_impl(*seeds, nu, z);
    if (nu.real() >= 0.0) {
      throw domain_error(
          "hermite_h: |2z| > 20 needs the integral form, which requires Re nu < 0");
    }
    return hermite_integral_impl(nu, z);
  };
}

Complex hermite_h(const Complex& nu, const Complex& z) {
  return hermite_evaluator(nu)(z);
}

Complex hermite_h_series(const Complex& nu, const Complex& z) {
  if (near_nonnegative_integer(nu))
    throw domain_error("hermite_h: nonnegative integer order unsupported");
  using detail::mcomplex;
  const mcomplex mnu = detail::to_mp(nu);
  HermiteSeeds seeds;
  seeds.gamma_even = detail::mp_gamma(-mnu / 2);
  seeds.gamma_odd = detail::mp_gamma((mcomplex(1, 0) - mnu) / 2);
  seeds.half_inv_gamma = exp(-detail::mp_log_gamma(-mnu)) / 2;
  return hermite_series_impl(seeds, nu, z);
}

Complex hermite_h_integral(const Complex& nu, const Complex& z) {
  if (!(nu.real() < 0.0))
    throw domain_error("hermite_h integral form requires Re nu < 0");
  return hermite_integral_impl(nu, z);
}

}  // namespace raux::special
