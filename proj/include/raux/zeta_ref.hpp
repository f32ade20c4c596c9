#pragma once

#include "raux/complexutil.hpp"

namespace raux::zeta_ref {

struct EMConfig {
  int n_terms = 0;      // 0 = automatic, ceil(10 + 1.3 |Im s|)
  int n_bernoulli = 12;  // tail correction order, in [4, 30]
};

// Euler-Maclaurin zeta, relative error <= ~1e-10 for Re s > -5, |Im s| <= 50.
// For Re s < 0.05 the classical functional equation zeta(s) = chi(s) zeta(1-s)
// is applied. s = 1 raises domain_error.
Complex zeta_em(const Complex& s, const EMConfig& cfg = {});

// Z(t) = Re( e^{i theta(t)} zeta(1/2 + it) ); the imaginary part of that
// product must stay below 1e-9 or accuracy_error is thrown.
double z_function(double t);

}  // namespace raux::zeta_ref
