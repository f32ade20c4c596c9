#pragma once

#include "raux/complexutil.hpp"
#include "raux/quad.hpp"

namespace raux::repr {

using quad::EvalResult;

// Validity domains: Direct any s; Main/Gabcke/Contour Re s > 0;
// Left/SiegelSin Re s < 0; Critical/K1K2 the line Re s = 1/2, t > 0.
enum class ReprId { Direct, Main, Left, SiegelSin, Gabcke, Contour, Critical, K1K2 };

struct K1K2Result {
  Complex value{0.0, 0.0};  // = prefactor(t) * (k1 + k2)
  Complex k1{0.0, 0.0};
  Complex k2{0.0, 0.0};
  double rho = 2.0;
  double t = 0.0;
  double abs_err = 0.0;
  std::int64_t n_evals = 0;
};

// Siegel's defining contour integral over the line through 1/2 with direction
// e^{i pi/4}, traversed downward-leftward; truncated at the parameter where
// the Gaussian envelope is exhausted. Valid for any finite s.
EvalResult r_direct(const Complex& s, double tol = quad::kDefaultTol);

// Mellin transform of the entire kernel F over (0, inf), Re s > 0.
EvalResult r_main(const Complex& s, double tol = quad::kDefaultTol);

// Left half-plane ray integral against g_left_kernel, Re s < 0.
EvalResult r_left(const Complex& s, double tol = quad::kDefaultTol);

// sin-form ray integral, Re s < 0.
EvalResult r_siegel_sin(const Complex& s, double tol = quad::kDefaultTol);

// Two-sided Hermite-weight integral, Re s > 0.
EvalResult r_gabcke(const Complex& s, double tol = quad::kDefaultTol);

// Same prefactor as r_main over the path [0,a] + horizontal half-line.
// a = 0 reduces to r_main by construction.
EvalResult r_contour(const Complex& s, const Complex& a,
                     double tol = quad::kDefaultTol);

// Critical-line form: prefactor (1 + i e^{-pi t}) e^{-2 i theta(t)} times the
// conditionally convergent integral, split at X0 = max(20, t); the tail is
// taken down the descent contour x = X0 - iv on which the entire kernel
// decays like e^{-2 pi v} (Cauchy; the same deformation that proves the
// improper integral converges).
EvalResult r_critical(double t, double tol = quad::kDefaultTol);

// K1/K2 split of the contour representation at a = rho t omega / (2 pi).
K1K2Result r_k1k2(double t, double rho = 2.0, double tol = quad::kDefaultTol);

// R(s) through the router: Main for Re s >= 0.05, Left for Re s <= -0.05,
// Direct in the border band.
EvalResult r_auto(const Complex& s, double tol = quad::kDefaultTol);

struct ZetaResult {
  Complex value{0.0, 0.0};
  double abs_err = 0.0;
  std::int64_t n_evals = 0;
};

// zeta(s) = R(s) + chi(s) conj(R(1 - conj s)); routed per half-plane.
ZetaResult zeta_from_r_ex(const Complex& s, double tol = quad::kDefaultTol);
Complex zeta_from_r(const Complex& s, double tol = quad::kDefaultTol);

}  // namespace raux::repr
