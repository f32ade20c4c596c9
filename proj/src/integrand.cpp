#include "raux/integrand.hpp"

#include <cmath>

#include "raux/quad.hpp"
#include "raux/special.hpp"

namespace raux::integrand {

namespace {
using constants::i_unit;
using constants::omega;
using constants::omega_bar;
using constants::pi;

// 1 - e^w as a stable two-case evaluation: expm1 near w = 0 (mod nothing),
// guarded exp elsewhere.
Complex one_minus_exp(const Complex& w) {
  if (std::abs(w.real()) < 0.5 && std::abs(w.imag()) < 0.5) return -cexpm1(w);
  if (w.real() < -700.0) return {1.0, 0.0};
  return 1.0 - std::exp(w);
}

}  // namespace

Complex f_kernel(const Complex& z) {
  if (!is_finite(z)) throw domain_error("f_kernel: non-finite argument");

  // nearest lattice point n*omega
  const double proj = (z * omega_bar).real();
  const double n = std::round(proj);
  const Complex d = z - n * omega;
  const Complex wd = 2.0 * pi * omega * d;

  if (std::abs(wd) < 1e-3) {
    // exponents re-expanded about n*omega; exact forms, not approximations
    const Complex num = -cexpm1(pi * omega * d * (1.0 - 2.0 * n) - pi * d * d);
    const Complex den = -cexpm1(wd);
    if (den == Complex(0.0, 0.0)) return Complex((1.0 - 2.0 * n) / 2.0, 0.0);
    return num / den;
  }

  const Complex en = -pi * z * z + pi * omega * z;
  const Complex ed = 2.0 * pi * omega * z;
  if (ed.real() > 700.0) {
    // denominator ~ -e^{ed}; fold it into the exponentials
    return cexp_safe(en - ed) - cexp_safe(-ed);
  }
  return one_minus_exp(en) / one_minus_exp(ed);
}

Complex g_left_kernel(double y) {
  if (!(y > 0.0)) throw domain_error("g_left_kernel: requires y > 0");
  const Complex num = cexp_safe(-pi * y * y + pi * omega_bar * y);
  const Complex den = -cexpm1(2.0 * pi * omega_bar * y);
  return num / den;
}

Complex critical_kernel_c(const Complex& x, double t) {
  return -cexp_safe(Complex(-0.5, t) * std::log(x)) * f_kernel(omega * x);
}

Complex critical_kernel(double x, double t) {
  if (!(x > 0.0)) throw domain_error("critical_kernel: requires x > 0");
  return critical_kernel_c(Complex(x, 0.0), t);
}

Complex direct_siegel_kernel(const Complex& x, const Complex& s) {
  if (std::abs(x.imag()) < 1e-9 &&
      std::abs(x.real() - std::round(x.real())) < 1e-9) {
    throw domain_error("direct_siegel_kernel: pole at integer x");
  }
  const Complex den = cexp_safe(pi * i_unit * x) - cexp_safe(-pi * i_unit * x);
  return cexp_safe(-s * std::log(x) + pi * i_unit * x * x) / den;
}

std::function<Complex(double)> gabcke_weight_fn(const Complex& s) {
  if (!(s.real() > 0.0))
    throw domain_error("gabcke_weight: requires Re s > 0");
  auto hermite = special::hermite_evaluator(-s);
  const Complex inv_gamma_s = cexp_safe(-special::log_gamma(s));
  const double sqrt_pi = 1.7724538509055160272981674833411452;
  return [hermite, inv_gamma_s, sqrt_pi, s](double x) -> Complex {
    const double z = x * sqrt_pi;
    Complex damped_h;  // e^{-pi x^2} H_{-s}(x sqrt(pi))
    if (std::abs(2.0 * z) <= 20.0) {
      damped_h = cexp_safe(Complex(-pi * x * x, 0.0)) * hermite(Complex(z, 0.0));
    } else {
      // the Gaussian damping folds into the Mellin form exactly:
      // e^{-z^2} H_{-s}(z) = (1/Gamma(s)) int_0^inf u^{s-1} e^{-(u+z)^2} du
      auto kern = [&](const Complex& u) {
        const Complex v = u + z;
        return cexp_safe((s - 1.0) * std::log(u) - v * v);
      };
      const double peak = std::max(1.0, -z);
      auto seg = quad::integrate_segment(kern, Complex(0.0, 0.0),
                                         Complex(peak + 1.0, 0.0), 1e-12,
                                         quad::PowerSingularity{s - 1.0});
      auto ray = quad::integrate_ray(kern, Complex(peak + 1.0, 0.0),
                                     Complex(1.0, 0.0),
                                     quad::TailEnvelope::gaussian(1.0), 1e-12);
      damped_h = inv_gamma_s * (seg.value + ray.value);
    }
    const Complex den = 1.0 + cexp_safe(-2.0 * pi * omega * x);
    return damped_h / den;
  };
}

Complex gabcke_weight(double x, const Complex& s) {
  if (!std::isfinite(x)) throw domain_error("gabcke_weight: non-finite x");
  return gabcke_weight_fn(s)(x);
}

}  // namespace raux::integrand
