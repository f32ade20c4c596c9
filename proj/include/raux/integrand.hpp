#pragma once

#include <functional>

#include "raux/complexutil.hpp"

namespace raux::integrand {

// The integrand kernels of the representation integrals. Each tag maps to
// exactly one evaluation routine below.
enum class KernelId { F_main, G_left, SiegelSin, CriticalLine, DirectSiegel, GabckeWeight };

// F(z) = (1 - e^{-pi z^2 + pi omega z}) / (1 - e^{2 pi omega z}); entire.
// The removable singularities at the lattice z = n omega (where
// F(n omega) = (1-2n)/2) are evaluated through expm1 re-expansions about the
// nearest lattice point whenever the denominator exponent is within 1e-3 of
// a period; direct division loses every digit closer in.
Complex f_kernel(const Complex& z);

// e^{-pi y^2 + pi conj(omega) y} / (1 - e^{2 pi conj(omega) y}), y > 0.
// Simple pole at y = 0; y * g_left_kernel(y) -> -omega/(2 pi).
Complex g_left_kernel(double y);

// e^{it log x} / sqrt(x) * e^{-(pi i/2)(x^2+x)} * sin(pi/2 (x^2-x)) / sin(pi x)
// for x > 0, continuous across the integers; equals -x^{-1/2+it} F(omega x).
Complex critical_kernel(double x, double t);
// Same kernel continued off the real axis (used by the contour-rotated tail).
Complex critical_kernel_c(const Complex& x, double t);

// x^{-s} e^{pi i x^2} / (e^{pi i x} - e^{-pi i x}); poles at integer x.
Complex direct_siegel_kernel(const Complex& x, const Complex& s);

// e^{-pi x^2} H_{-s}(x sqrt(pi)) / (1 + e^{-2 pi omega x}).
Complex gabcke_weight(double x, const Complex& s);

// gabcke_weight with the s-dependent Hermite seeds computed once.
std::function<Complex(double)> gabcke_weight_fn(const Complex& s);

}  // namespace raux::integrand
