#include "raux/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "raux/detail/parallel.hpp"
#include "raux/integrand.hpp"
#include "raux/quad.hpp"
#include "raux/repr.hpp"
#include "raux/special.hpp"
#include "raux/zeta_ref.hpp"

namespace raux::verify {

namespace {
using constants::i_unit;
using constants::omega;
using constants::pi;
using constants::sqrt2;
}  // namespace

const char* lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::SiegelIdentity: return "siegel_identity";
    case LemmaId::MellinZeta: return "mellin_zeta";
    case LemmaId::LemmaDelta: return "lemma_delta";
    case LemmaId::LemmaR: return "lemma_R";
    case LemmaId::LemmaMin: return "lemma_min";
    case LemmaId::K2Bound: return "k2_bound";
    case LemmaId::SegmentDecay: return "segment_decay";
    case LemmaId::DecaySlope: return "decay_slope";
  }
  return "unknown";
}

std::string to_json(const BoundScanReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "{\"lemma_id\":\"" << lemma_name(r.lemma_id) << "\",\"grid\":{";
  bool first = true;
  for (const auto& [key, vals] : r.grid) {
    if (!first) os << ",";
    first = false;
    os << "\"" << key << "\":[";
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (i) os << ",";
      os << vals[i];
    }
    os << "]";
  }
  os << "},\"worst_ratio\":" << r.worst_ratio
     << ",\"bound_constant\":" << r.bound_constant
     << ",\"pass\":" << (r.pass ? "true" : "false") << "}";
  return os.str();
}

double check_siegel_identity(double y) {
  if (std::abs(y - std::round(y)) < 1e-9)
    throw domain_error("check_siegel_identity: integer y hits the sine poles");
  auto kern = [&](const Complex& x) {
    return cexp_safe(-pi * x * x - 2.0 * pi * omega * x * y) /
           (1.0 + cexp_safe(-2.0 * pi * omega * x));
  };
  // both rays carry Gaussian decay; to the left the denominator growth
  // dominates the e^{2 pi |x| y} drift of the numerator
  auto right = quad::integrate_ray(kern, Complex(0.0, 0.0), Complex(1.0, 0.0),
                                   quad::TailEnvelope::gaussian(0.8 * pi), 1e-12);
  auto left = quad::integrate_ray(kern, Complex(0.0, 0.0), Complex(-1.0, 0.0),
                                  quad::TailEnvelope::gaussian(0.8 * pi), 1e-12);
  const Complex lhs = right.value - left.value;
  const Complex eipy = std::exp(i_unit * pi * y);
  const Complex rhs = -std::exp(-i_unit * pi * y) *
                      (std::exp(i_unit * pi * y * y) - eipy) / (eipy - 1.0 / eipy);
  return std::abs(lhs - rhs);
}

double check_mellin_zeta(const Complex& s) {
  if (!(s.real() > 1.0)) throw domain_error("check_mellin_zeta: requires Re s > 1");
  auto kern = [&](const Complex& y) {
    return cexp_safe((s - 1.0) * std::log(y)) /
           (-cexpm1(2.0 * pi * omega * y));
  };
  auto lhs = quad::integrate_ray(kern, Complex(0.0, 0.0), Complex(1.0, 0.0),
                                 quad::TailEnvelope::exponential(0.9 * sqrt2 * pi),
                                 1e-12, quad::PowerSingularity{s - 2.0});
  const Complex rhs = -cexp_safe(-i_unit * pi * s / 4.0 -
                                 s * std::log(2.0 * pi) + special::log_gamma(s)) *
                      zeta_ref::zeta_em(s);
  return std::abs(lhs.value - rhs);
}

BoundScanReport scan_siegel_identity(const std::vector<double>& ys, double tol) {
  BoundScanReport r;
  r.lemma_id = LemmaId::SiegelIdentity;
  r.grid["y"] = ys;
  r.bound_constant = tol;
  std::vector<double> res(ys.size());
  detail::parallel_for(ys.size(), [&](std::size_t i) {
    res[i] = check_siegel_identity(ys[i]);
  });
  r.worst_ratio = *std::max_element(res.begin(), res.end());
  r.pass = r.worst_ratio <= tol;
  return r;
}

BoundScanReport scan_mellin_zeta(const std::vector<Complex>& ss, double tol) {
  BoundScanReport r;
  r.lemma_id = LemmaId::MellinZeta;
  for (const auto& s : ss) {
    r.grid["sigma"].push_back(s.real());
    r.grid["t"].push_back(s.imag());
  }
  r.bound_constant = tol;
  std::vector<double> res(ss.size());
  detail::parallel_for(ss.size(), [&](std::size_t i) {
    res[i] = check_mellin_zeta(ss[i]);
  });
  r.worst_ratio = *std::max_element(res.begin(), res.end());
  r.pass = r.worst_ratio <= tol;
  return r;
}

BoundScanReport scan_lemma_delta(const std::vector<double>& deltas,
                                 const std::vector<double>& xs) {
  BoundScanReport r;
  r.lemma_id = LemmaId::LemmaDelta;
  r.grid["delta"] = deltas;
  r.grid["x"] = {xs.front(), xs.back(), static_cast<double>(xs.size())};
  r.bound_constant = 2.0 / 3.0;
  std::vector<double> worst(deltas.size(), 0.0);
  detail::parallel_for(deltas.size(), [&](std::size_t i) {
    const double d = deltas[i];
    if (!(d > 0.0)) throw domain_error("scan_lemma_delta: delta must be positive");
    double w = 0.0;
    for (double x : xs) {
      w = std::max(w, d * std::abs(integrand::f_kernel(d + omega * x)));
    }
    worst[i] = w;
  });
  r.worst_ratio = *std::max_element(worst.begin(), worst.end());
  r.pass = r.worst_ratio <= r.bound_constant;
  return r;
}

std::pair<BoundScanReport, BoundScanReport> scan_lemma_R(
    const std::vector<double>& Rs, int n_x) {
  for (double R : Rs)
    if (!(R > 8.0)) throw domain_error("scan_lemma_R: requires R > 8");

  std::vector<double> worst_R(Rs.size(), 0.0), worst_min(Rs.size(), 0.0);
  detail::parallel_for(Rs.size(), [&](std::size_t i) {
    const double R = Rs[i];
    double wR = 0.0, wMin = 0.0;
    for (int k = 1; k < n_x; ++k) {
      const double x = R * k / n_x;
      const double fab = std::abs(integrand::f_kernel(Complex(R, x)));
      wR = std::max(wR, fab / R);
      wMin = std::max(wMin, fab / std::min(R, 1.0 / (R - x)));
    }
    worst_R[i] = wR;
    worst_min[i] = wMin;
  });

  auto stable = [](const std::vector<double>& w) {
    const double lo = *std::min_element(w.begin(), w.end());
    const double hi = *std::max_element(w.begin(), w.end());
    return std::isfinite(hi) && hi <= 2.0 * lo;
  };

  BoundScanReport a;
  a.lemma_id = LemmaId::LemmaR;
  a.grid["R"] = Rs;
  a.grid["n_x"] = {static_cast<double>(n_x)};
  a.worst_ratio = *std::max_element(worst_R.begin(), worst_R.end());
  a.bound_constant = 2.0 * *std::min_element(worst_R.begin(), worst_R.end());
  a.pass = stable(worst_R);

  BoundScanReport b = a;
  b.lemma_id = LemmaId::LemmaMin;
  b.worst_ratio = *std::max_element(worst_min.begin(), worst_min.end());
  b.bound_constant = 2.0 * *std::min_element(worst_min.begin(), worst_min.end());
  b.pass = stable(worst_min);
  return {a, b};
}

BoundScanReport scan_k2_bound(const std::vector<double>& ts,
                              const std::vector<double>& rhos) {
  BoundScanReport r;
  r.lemma_id = LemmaId::K2Bound;
  r.grid["t"] = ts;
  r.grid["rho"] = rhos;
  r.bound_constant = 1.0;

  struct Case { double t, rho; };
  std::vector<Case> cases;
  for (double t : ts)
    for (double rho : rhos) {
      if (!(rho > 1.0 && rho * t > pi))
        throw domain_error("scan_k2_bound: needs rho > 1 and rho t > pi");
      cases.push_back({t, rho});
    }
  std::vector<double> ratio(cases.size());
  detail::parallel_for(cases.size(), [&](std::size_t i) {
    const auto [t, rho] = cases[i];
    const auto k = repr::r_k1k2(t, rho, 1e-9);
    const double bound = std::pow(2.0, 1.25) /
                         std::abs(std::sin(rho * t / 2.0)) *
                         std::sqrt(pi * rho / (rho - 1.0));
    ratio[i] = std::abs(k.k2) / bound;
  });
  r.worst_ratio = *std::max_element(ratio.begin(), ratio.end());
  r.pass = r.worst_ratio <= 1.0;
  return r;
}

BoundScanReport scan_segment_decay(const std::vector<double>& Rs, Complex a,
                                   double t) {
  if (std::abs(a) > 2.0)
    throw domain_error("scan_segment_decay: |a| must be <= 2");
  BoundScanReport r;
  r.lemma_id = LemmaId::SegmentDecay;
  r.grid["R"] = Rs;
  r.grid["a"] = {a.real(), a.imag()};
  r.grid["t"] = {t};
  r.bound_constant = 1.0;
  if (a == Complex(0.0, 0.0)) {
    r.worst_ratio = 0.0;
    r.pass = true;
    return r;
  }
  const Complex s{0.5, t};
  double worst = 0.0;
  for (double R : Rs) {
    if (!(R >= 8.0)) throw domain_error("scan_segment_decay: requires R >= 8");
    auto kern = [&](const Complex& z) {
      return cexp_safe((s - 1.0) * std::log(z)) * integrand::f_kernel(z);
    };
    auto I = quad::integrate_segment(kern, Complex(R, 0.0), Complex(R, 0.0) + a,
                                     1e-6);
    const double bound = 2.0 / std::sqrt(R) * std::exp(pi * std::abs(t) / 2.0) *
                         std::exp(-pi * R) * std::abs(a);
    worst = std::max(worst, std::abs(I.value) / bound);
  }
  r.worst_ratio = worst;
  r.pass = worst <= 1.0;
  return r;
}

BoundScanReport decay_slope(double y_lo, double y_hi, double step) {
  BoundScanReport r;
  r.lemma_id = LemmaId::DecaySlope;
  r.grid["y"] = {y_lo, y_hi, step};
  r.bound_constant = 0.01;

  // least squares on (y, log|F(y)|)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (double y = y_lo; y <= y_hi + 1e-12; y += step) {
    const double ly = std::log(std::abs(integrand::f_kernel(Complex(y, 0.0))));
    sx += y;
    sy += ly;
    sxx += y * y;
    sxy += y * ly;
    ++n;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double target = -pi * sqrt2;
  r.worst_ratio = std::abs(slope - target) / std::abs(target);
  r.pass = r.worst_ratio <= r.bound_constant;
  return r;
}

std::vector<BoundScanReport> run_all() {
  std::vector<BoundScanReport> out;
  out.push_back(scan_siegel_identity({0.1, 0.5, 1.3, 2.7}));
  out.push_back(scan_mellin_zeta({Complex(2.0, 0.0), Complex(3.0, 0.0), Complex(2.0, 5.0)}));
  std::vector<double> xs;
  for (double x = 0.0; x <= 20.0 + 1e-9; x += 0.1) xs.push_back(x);
  out.push_back(scan_lemma_delta({0.1, 0.3, 1.0, 3.0, 10.0}, xs));
  auto [la, lb] = scan_lemma_R({10.0, 16.0, 24.0});
  out.push_back(la);
  out.push_back(lb);
  out.push_back(scan_k2_bound({5.0, 10.0, 20.0}, {1.5, 2.0, 3.0}));
  out.push_back(scan_segment_decay({8.0, 12.0, 16.0}, Complex(0.0, 1.0), 5.0));
  out.push_back(decay_slope());
  return out;
}

}  // namespace raux::verify
