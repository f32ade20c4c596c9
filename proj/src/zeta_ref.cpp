#include "raux/zeta_ref.hpp"

#include <cmath>

#include "raux/special.hpp"

namespace raux::zeta_ref {

namespace {

// B_2, B_4, ..., B_60
const double kBernoulli[30] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
    1520097643918070802691.0 / 1806.0,
    -27833269579301024235023.0 / 690.0,
    596451111593912163277961.0 / 282.0,
    -5609403368997817686249127547.0 / 46410.0,
    495057205241079648212477525.0 / 66.0,
    -801165718135489957347924991853.0 / 1590.0,
    29149963634884862421418123812691.0 / 798.0,
    -2479392929313226753685415739663229.0 / 870.0,
    84483613348880041862046775994036021.0 / 354.0,
    -1215233140483755572040304994079820246041491.0 / 56786730.0};

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

Complex zeta_em(const Complex& s, const EMConfig& cfg) {
  if (!is_finite(s)) throw domain_error("zeta_em: non-finite argument");
  if (std::abs(s - Complex(1.0, 0.0)) < 1e-12)
    throw domain_error("zeta_em: pole at s = 1");
  if (s.real() < 0.05) {
    return special::chi(s) * zeta_em(1.0 - s, cfg);
  }

  const int n_bern = std::min(std::max(cfg.n_bernoulli, 4), 30);
  const int n =
      cfg.n_terms > 0
          ? cfg.n_terms
          : static_cast<int>(std::ceil(10.0 + 1.3 * std::abs(s.imag())));

  // sum_{k<n} k^{-s}, compensated
  Complex sum{0.0, 0.0};
  Complex comp{0.0, 0.0};
  for (int k = 1; k < n; ++k) {
    const Complex term = cexp_safe(-s * std::log(static_cast<double>(k)));
    const Complex y = term - comp;
    const Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }

  const double logn = std::log(static_cast<double>(n));
  const Complex n_to_minus_s = cexp_safe(-s * logn);
  Complex result = sum + 0.5 * n_to_minus_s + n_to_minus_s * static_cast<double>(n) / (s - 1.0);

  // tail: sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * n^{-s-2j+1}
  Complex rising = s;  // j = 1
  for (int j = 1; j <= n_bern; ++j) {
    if (j > 1) rising *= (s + static_cast<double>(2 * j - 3)) * (s + static_cast<double>(2 * j - 2));
    const double coeff = kBernoulli[j - 1] / factorial(2 * j);
    result += coeff * rising * cexp_safe(-(s + static_cast<double>(2 * j - 1)) * logn);
  }
  return result;
}

double z_function(double t) {
  if (!std::isfinite(t)) throw domain_error("z_function: non-finite argument");
  const Complex w = cexp_safe(Complex(0.0, special::theta(t))) *
                    zeta_em(Complex(0.5, t));
  if (std::abs(w.imag()) >= 1e-9) {
    throw accuracy_error("z_function: rotated zeta is not real to 1e-9", w,
                         std::abs(w.imag()));
  }
  return w.real();
}

}  // namespace raux::zeta_ref
