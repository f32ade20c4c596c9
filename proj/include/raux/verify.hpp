#pragma once

#include <map>
#include <string>
#include <vector>

#include "raux/complexutil.hpp"

namespace raux::verify {

enum class LemmaId {
  SiegelIdentity,
  MellinZeta,
  LemmaDelta,
  LemmaR,
  LemmaMin,
  K2Bound,
  SegmentDecay,
  DecaySlope
};

const char* lemma_name(LemmaId id);

// One scan outcome. For inequality lemmas pass <=> worst_ratio <=
// bound_constant; identity checks put the largest residual in worst_ratio and
// the residual tolerance in bound_constant.
struct BoundScanReport {
  LemmaId lemma_id = LemmaId::DecaySlope;
  std::map<std::string, std::vector<double>> grid;
  double worst_ratio = 0.0;
  double bound_constant = 0.0;
  bool pass = false;
};

std::string to_json(const BoundScanReport& report);

// | int_R e^{-pi x^2 - 2 pi omega x y} / (1 + e^{-2 pi omega x}) dx
//   - ( -e^{-pi i y} (e^{pi i y^2} - e^{pi i y}) / (e^{pi i y} - e^{-pi i y}) ) |
double check_siegel_identity(double y);

// | int_0^inf y^{s-1}/(1 - e^{2 pi omega y}) dy
//   - ( -e^{-pi i s/4} (2 pi)^{-s} Gamma(s) zeta(s) ) |,  Re s > 1.
double check_mellin_zeta(const Complex& s);

BoundScanReport scan_siegel_identity(const std::vector<double>& ys,
                                     double tol = 1e-10);
BoundScanReport scan_mellin_zeta(const std::vector<Complex>& ss,
                                 double tol = 1e-8);

// delta * |F(delta + omega x)| <= 2/3 over the grid.
BoundScanReport scan_lemma_delta(const std::vector<double>& deltas,
                                 const std::vector<double>& xs);

// |F(R + ix)| against C R and C min(R, 1/(R-x)); the constants are
// existence-only, so the reports record the empirical worst ratios and pass
// when they stay within a factor 2 across the R list.
std::pair<BoundScanReport, BoundScanReport> scan_lemma_R(
    const std::vector<double>& Rs, int n_x = 1000);

// |K2| / ( 2^{5/4} / |sin(rho t / 2)| * sqrt(pi rho / (rho - 1)) ) <= 1.
BoundScanReport scan_k2_bound(const std::vector<double>& ts,
                              const std::vector<double>& rhos);

// | int_R^{R+ia} z^{s-1} F dz | <= 2 R^{-1/2} e^{pi |t|/2} e^{-pi R} |a|,
// s = 1/2 + it.
BoundScanReport scan_segment_decay(const std::vector<double>& Rs, Complex a,
                                   double t);

// least-squares slope of log |F(y)| on [y_lo, y_hi] vs -pi sqrt(2), 1%.
BoundScanReport decay_slope(double y_lo = 5.0, double y_hi = 10.0,
                            double step = 0.1);

// Everything above on its default grids, in enum order (8 reports).
std::vector<BoundScanReport> run_all();

}  // namespace raux::verify
