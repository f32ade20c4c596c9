#include "raux/repr.hpp"

#include <cmath>

#include "raux/integrand.hpp"
#include "raux/special.hpp"

namespace raux::repr {

namespace {

using constants::i_unit;
using constants::omega;
using constants::pi;
using constants::sqrt2;

constexpr double kLog2Pi = 1.8378770664093454835606594728112353;
constexpr double kLog2 = 0.69314718055994530941723212145817657;
constexpr double kLogPi = 1.1447298858494001741434273513530587;

EvalResult scaled(EvalResult r, const Complex& pref) {
  r.value *= pref;
  r.abs_err *= std::abs(pref);
  return r;
}

// -(2 pi)^s e^{i pi s/4} / Gamma(s), assembled in log space
Complex main_prefactor(const Complex& s) {
  return -cexp_safe(s * kLog2Pi + i_unit * pi * s / 4.0 - special::log_gamma(s));
}

}  // namespace

EvalResult r_direct(const Complex& s, double tol) {
  if (!is_finite(s)) throw domain_error("r_direct: non-finite s");
  const double sigma = s.real();
  const double t = s.imag();

  // Gaussian truncation of the Siegel line x = 1/2 + omega u
  double U = std::sqrt((44.0 + 0.8 * std::abs(t) + 3.0 * std::abs(sigma)) / pi) + 1.2;
  auto kern = [&](const Complex& x) { return integrand::direct_siegel_kernel(x, s); };
  const double scale_mid = std::abs(kern(Complex(0.5, 0.0) + 0.3 * omega));
  for (int i = 0; i < 40; ++i) {
    const double edge = std::max(std::abs(kern(Complex(0.5, 0.0) + U * omega)),
                                 std::abs(kern(Complex(0.5, 0.0) - U * omega)));
    if (edge <= 1e-18 * std::max(scale_mid, 1e-30)) break;
    U += 0.5;
  }

  // downward-leftward orientation: from 1/2 + omega U to 1/2 - omega U
  EvalResult r = quad::integrate_segment(kern, Complex(0.5, 0.0) + U * omega,
                                         Complex(0.5, 0.0) - U * omega, tol);
  r.truncated_at = U;
  return r;
}

EvalResult r_main(const Complex& s, double tol) {
  if (!(s.real() > 0.0)) throw domain_error("r_main: requires Re s > 0");
  auto kern = [&](const Complex& y) {
    return cexp_safe((s - 1.0) * std::log(y)) * integrand::f_kernel(y);
  };
  EvalResult r = quad::integrate_ray(kern, Complex(0.0, 0.0), Complex(1.0, 0.0),
                                     quad::TailEnvelope::exponential(0.95 * pi * sqrt2),
                                     tol, quad::PowerSingularity{s - 1.0});
  return scaled(r, main_prefactor(s));
}

EvalResult r_left(const Complex& s, double tol) {
  if (!(s.real() < 0.0)) throw domain_error("r_left: requires Re s < 0");
  auto kern = [&](const Complex& y) {
    return cexp_safe(-s * std::log(y)) * integrand::g_left_kernel(y.real());
  };
  EvalResult r = quad::integrate_ray(kern, Complex(0.0, 0.0), Complex(1.0, 0.0),
                                     quad::TailEnvelope::gaussian(0.9 * pi), tol,
                                     quad::PowerSingularity{-s - 1.0});
  const Complex pref =
      -omega * cexp_safe(-i_unit * pi * s / 4.0) * (1.0 - cexp_safe(i_unit * pi * s));
  return scaled(r, pref);
}

EvalResult r_siegel_sin(const Complex& s, double tol) {
  if (!(s.real() < 0.0)) throw domain_error("r_siegel_sin: requires Re s < 0");
  auto kern = [&](const Complex& y) {
    return cexp_safe(-s * std::log(y) - pi * y * y) / std::sin(pi * omega * y);
  };
  EvalResult r = quad::integrate_ray(kern, Complex(0.0, 0.0), Complex(1.0, 0.0),
                                     quad::TailEnvelope::gaussian(0.9 * pi), tol,
                                     quad::PowerSingularity{-s - 1.0});
  const Complex pref =
      omega * cexp_safe(i_unit * pi * s / 4.0) * std::sin(pi * s / 2.0);
  return scaled(r, pref);
}

EvalResult r_gabcke(const Complex& s, double tol) {
  if (!(s.real() > 0.0)) throw domain_error("r_gabcke: requires Re s > 0");
  auto weight = integrand::gabcke_weight_fn(s);
  auto kern = [&weight](const Complex& x) { return weight(x.real()); };

  EvalResult right = quad::integrate_ray(kern, Complex(0.0, 0.0), Complex(1.0, 0.0),
                                         quad::TailEnvelope::gaussian(0.9 * pi), tol);
  EvalResult left = quad::integrate_ray(kern, Complex(0.0, 0.0), Complex(-1.0, 0.0),
                                        quad::TailEnvelope::exponential(0.9 * sqrt2 * pi),
                                        tol);
  EvalResult r;
  r.value = right.value - left.value;  // ray(-1) carries the -1 direction factor
  r.abs_err = right.abs_err + left.abs_err;
  r.n_evals = right.n_evals + left.n_evals;
  r.truncated_at = right.truncated_at;
  const Complex pref =
      -cexp_safe(s * kLog2 + s * kLogPi / 2.0 + i_unit * pi * s / 4.0);
  return scaled(r, pref);
}

EvalResult r_contour(const Complex& s, const Complex& a, double tol) {
  if (!(s.real() > 0.0)) throw domain_error("r_contour: requires Re s > 0");
  if (a == Complex(0.0, 0.0)) return r_main(s, tol);
  if (!(a.real() >= 0.0))
    throw domain_error("r_contour: Re a must be nonnegative");

  auto kern = [&](const Complex& z) {
    return cexp_safe((s - 1.0) * std::log(z)) * integrand::f_kernel(z);
  };
  quad::ContourPath path;
  path.nodes = {Complex(0.0, 0.0), a};
  path.terminal_ray = quad::ContourPath::Ray{Complex(1.0, 0.0)};
  EvalResult r = quad::integrate_path(
      kern, path, tol, quad::PowerSingularity{s - 1.0},
      quad::TailEnvelope::exponential(0.9 * pi * sqrt2));
  return scaled(r, main_prefactor(s));
}

EvalResult r_critical(double t, double tol) {
  if (!(t > 0.0)) throw domain_error("r_critical: requires t > 0");
  const double X0 = std::floor(std::max(20.0, t)) + 0.5;
  auto kern = [&](const Complex& x) { return integrand::critical_kernel_c(x, t); };

  EvalResult head =
      quad::integrate_segment(kern, Complex(0.0, 0.0), Complex(X0, 0.0), tol,
                              quad::PowerSingularity{Complex(-0.5, t)});
  // descent contour x = X0 - iv; |kernel| ~ e^{-(2 pi - t/X0) v}
  EvalResult tail =
      quad::integrate_ray(kern, Complex(X0, 0.0), Complex(0.0, -1.0),
                          quad::TailEnvelope::exponential(0.9 * (2.0 * pi - t / X0)),
                          tol);
  EvalResult r;
  r.value = head.value + tail.value;
  r.abs_err = head.abs_err + tail.abs_err;
  r.n_evals = head.n_evals + tail.n_evals;
  r.truncated_at = tail.truncated_at;

  const Complex pref = (1.0 + i_unit * std::exp(-pi * t)) *
                       cexp_safe(Complex(0.0, -2.0 * special::theta(t)));
  return scaled(r, pref);
}

K1K2Result r_k1k2(double t, double rho, double tol) {
  if (!(t > 0.0 && rho > 0.0))
    throw domain_error("r_k1k2: requires t > 0 and rho > 0");

  // K1, rescaled form: -omega e^{-i t log t} int_0^{rho t} x^{-1/2+it} F(omega x / 2 pi) dx
  auto k1_kern = [&](const Complex& x) {
    return cexp_safe(Complex(-0.5, t) * std::log(x)) *
           integrand::f_kernel(omega * x / (2.0 * pi));
  };
  EvalResult q1 = quad::integrate_segment(k1_kern, Complex(0.0, 0.0),
                                          Complex(rho * t, 0.0), tol,
                                          quad::PowerSingularity{Complex(-0.5, t)});
  const Complex k1_pref = -omega * cexp_safe(Complex(0.0, -t * std::log(t)));
  const Complex k1 = k1_pref * q1.value;

  // K2 integrand, exponents joined so nothing overflows
  auto k2_kern = [&](const Complex& xc) {
    const double x = xc.real();
    const Complex wx = omega + x;
    const Complex expo = pi * t / 4.0 + i_unit * t * std::log(wx) -
                         t * rho * omega * x - 0.5 * std::log(wx);
    const Complex num =
        1.0 - cexp_safe(-(rho * t) * (rho * t) / (4.0 * pi) * wx * wx +
                        rho * t / 2.0 * (i_unit + omega * x));
    const Complex den = 1.0 - cexp_safe(-rho * t * (i_unit + omega * x));
    return cexp_safe(expo) * num / den;
  };
  const double decay = (rho > 1.1) ? 0.9 * t * (rho - 1.0) / sqrt2
                                   : 0.4 * t * rho / sqrt2;
  EvalResult q2 = quad::integrate_ray(k2_kern, Complex(0.0, 0.0), Complex(1.0, 0.0),
                                      quad::TailEnvelope::exponential(decay), tol);
  const Complex k2_pref = std::sqrt(omega * rho * t) *
                          cexp_safe(Complex(0.0, t * (std::log(rho) - rho)));
  const Complex k2 = k2_pref * q2.value;

  const Complex assemble = cexp_safe(-pi * t / 2.0 -
                                     special::log_gamma(Complex(0.5, t)) +
                                     Complex(0.0, t * std::log(t)));
  K1K2Result out;
  out.k1 = k1;
  out.k2 = k2;
  out.rho = rho;
  out.t = t;
  out.value = assemble * (k1 + k2);
  out.abs_err = std::abs(assemble) *
                (std::abs(k1_pref) * q1.abs_err + std::abs(k2_pref) * q2.abs_err);
  out.n_evals = q1.n_evals + q2.n_evals;
  return out;
}

EvalResult r_auto(const Complex& s, double tol) {
  if (s.real() >= 0.05) return r_main(s, tol);
  if (s.real() <= -0.05) return r_left(s, tol);
  return r_direct(s, tol);
}

ZetaResult zeta_from_r_ex(const Complex& s, double tol) {
  const EvalResult r1 = r_auto(s, tol);
  const Complex s_reflected = 1.0 - std::conj(s);
  const EvalResult r2 = r_auto(s_reflected, tol);
  const Complex c = special::chi(s);
  ZetaResult out;
  out.value = r1.value + c * std::conj(r2.value);
  out.abs_err = r1.abs_err + std::abs(c) * r2.abs_err;
  out.n_evals = r1.n_evals + r2.n_evals;
  return out;
}

Complex zeta_from_r(const Complex& s, double tol) {
  return zeta_from_r_ex(s, tol).value;
}

}  // namespace raux::repr
