#include "raux/quad.hpp"

#include <algorithm>
#include <cmath>

namespace raux::quad {

namespace {

// Gauss 7 / Kronrod 15 on [-1,1]; nodes are +-xgk[i], xgk[7] = 0.
// Odd-indexed Kronrod nodes are the Gauss-7 nodes.
const double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

const double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

const double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  Complex value{0.0, 0.0};
  double err = 0.0;
  double l1 = 0.0;  // integral of |g|, kronrod-weighted
};

struct Workspace {
  const std::function<Complex(double)>* g = nullptr;
  std::int64_t evals = 0;
  std::int64_t max_evals = 20'000'000;
  double err = 0.0;
  double l1 = 0.0;
  bool exhausted = false;
};

Panel gk15(Workspace& ws, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const auto& g = *ws.g;

  Complex f0 = g(c);
  Complex k15 = wgk[7] * f0;
  Complex g7 = wg[3] * f0;
  double res_abs = wgk[7] * std::abs(f0);
  for (int i = 0; i < 7; ++i) {
    const Complex f1 = g(c + h * xgk[i]);
    const Complex f2 = g(c - h * xgk[i]);
    k15 += wgk[i] * (f1 + f2);
    res_abs += wgk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) g7 += wg[i / 2] * (f1 + f2);
  }
  ws.evals += 15;
  Panel p;
  p.value = k15 * h;
  p.err = std::abs((k15 - g7) * h);
  p.l1 = res_abs * std::abs(h);
  return p;
}

// Recursive bisection; the child with the larger error estimate receives 70%
// of the remaining tolerance, the other 30%.
Complex adapt(Workspace& ws, double a, double b, double tol, int depth,
              const Panel& p) {
  if (p.err <= tol || depth >= 48 || ws.evals >= ws.max_evals) {
    if (p.err > tol) ws.exhausted = true;
    ws.err += p.err;
    ws.l1 += p.l1;
    return p.value;
  }
  const double m = 0.5 * (a + b);
  const Panel pl = gk15(ws, a, m);
  const Panel pr = gk15(ws, m, b);
  if (pl.err + pr.err <= tol) {
    ws.err += pl.err + pr.err;
    ws.l1 += pl.l1 + pr.l1;
    return pl.value + pr.value;
  }
  const double tl = (pl.err >= pr.err) ? 0.7 * tol : 0.3 * tol;
  return adapt(ws, a, m, tl, depth + 1, pl) +
         adapt(ws, m, b, tol - tl, depth + 1, pr);
}

struct AdaptOut {
  Complex value{0.0, 0.0};
  double err = 0.0;
  double l1 = 0.0;
  std::int64_t evals = 0;
  bool exhausted = false;
};

// Adaptive pass over [0,1] in parameter space with an absolute target.
AdaptOut adapt_run(const std::function<Complex(double)>& g, double abs_tol,
                   std::int64_t max_evals) {
  Workspace ws;
  ws.g = &g;
  ws.max_evals = max_evals;
  const Panel whole = gk15(ws, 0.0, 1.0);
  AdaptOut out;
  out.value = adapt(ws, 0.0, 1.0, abs_tol, 0, whole);
  out.err = ws.err;
  out.l1 = ws.l1;
  out.evals = ws.evals;
  out.exhausted = ws.exhausted;
  return out;
}

// Plain segment: two-phase relative targeting. The first pass aims at the
// L1-based scale; when heavy cancellation is detected the pass is rerun
// against the measured value, clamped at the binary64 conditioning floor.
EvalResult segment_plain(const Kernel& f, Complex z0, Complex z1, double tol,
                         std::int64_t max_evals) {
  const Complex delta = z1 - z0;
  auto g = [&](double u) { return f(z0 + u * delta) * delta; };

  Workspace probe;
  probe.g = &g;
  const Panel whole = gk15(probe, 0.0, 1.0);
  double scale = std::max(std::abs(whole.value), 1e-3 * whole.l1);
  double target = std::max(tol * scale, kAbsFloor);

  AdaptOut run = adapt_run(g, target, max_evals);
  const double cond_floor = 1e-16 * run.l1;
  double target2 = std::max({tol * std::abs(run.value), cond_floor, kAbsFloor});
  std::int64_t evals = probe.evals + run.evals;
  if (target2 < 0.5 * target) {
    run = adapt_run(g, target2, max_evals);
    evals += run.evals;
  }

  EvalResult r;
  r.value = run.value;
  r.abs_err = run.err + 1e-16 * run.l1;
  r.n_evals = evals;
  const double wanted = std::max(tol * std::abs(run.value), kAbsFloor);
  if (run.exhausted && r.abs_err > 30.0 * std::max(wanted, cond_floor)) {
    throw accuracy_error("integrate_segment: tolerance unattainable", r.value,
                         r.abs_err);
  }
  return r;
}

// Graded segment: geometric panels toward the singular endpoint z0 (ratio
// 1/4, depth <= 60). The remaining stub [z0, z_m] is integrated with the
// declared power model f ~ C (z-z0)^p, which gives f(z_m)(z_m - z0)/(p+1);
// the defect of that model across the innermost panel provides its error
// estimate.
EvalResult segment_graded(const Kernel& f, Complex z0, Complex z1, double tol,
                          Complex p, std::int64_t max_evals) {
  const Complex delta = z1 - z0;
  auto g = [&](double u) { return f(z0 + u * delta) * delta; };

  EvalResult r;
  double value_err = 0.0;
  Complex total{0.0, 0.0};
  double scale = 0.0;
  Complex prev_stub{0.0, 0.0};
  bool have_prev = false;

  auto stub_at = [&](double eps) -> Complex {
    const Complex zm = z0 + eps * delta;
    ++r.n_evals;
    return f(zm) * (zm - z0) / (p + 1.0);
  };

  double hi = 1.0;
  for (int level = 0; level < 60; ++level) {
    const double lo = hi * 0.25;
    Workspace ws;
    auto gg = [&](double u) { return g(u); };
    std::function<Complex(double)> gf = gg;
    ws.g = &gf;
    ws.max_evals = max_evals;
    const Panel whole = gk15(ws, lo, hi);
    if (level == 0) scale = std::max(std::abs(whole.value), 1e-3 * whole.l1);
    const double tgt =
        std::max(0.25 * tol * std::max(scale, std::abs(total)), kAbsFloor);
    const Complex piece = adapt(ws, lo, hi, tgt, 0, whole);
    total += piece;
    value_err += ws.err + 1e-16 * ws.l1;
    r.n_evals += ws.evals;
    scale = std::max(scale, std::abs(total));

    const Complex stub = stub_at(lo);
    if (have_prev) {
      // prev_stub should equal piece + stub when the power model is exact
      const double defect = std::abs(prev_stub - piece - stub);
      if (defect <= 0.3 * std::max(tol * scale, kAbsFloor) || level == 59) {
        total += stub;
        value_err += defect;
        r.value = total;
        r.abs_err = value_err;
        if (level == 59 && defect > 30.0 * std::max(tol * scale, kAbsFloor)) {
          throw accuracy_error("integrate_segment: graded endpoint did not converge",
                               r.value, r.abs_err);
        }
        return r;
      }
    }
    prev_stub = stub;
    have_prev = true;
    hi = lo;
  }
  total += prev_stub;
  r.value = total;
  r.abs_err = value_err + std::abs(prev_stub);
  return r;
}

double envelope_ratio(const TailEnvelope& env, double u_from, double u_to) {
  switch (env.kind) {
    case TailEnvelope::Kind::gaussian:
      return std::exp(-env.rate * (u_to * u_to - u_from * u_from));
    case TailEnvelope::Kind::exponential:
      return std::exp(-env.rate * (u_to - u_from));
    default:
      return 1.0;
  }
}

// Bound on int_u^inf envelope(v)/envelope(u) dv.
double envelope_tail_factor(const TailEnvelope& env, double u) {
  switch (env.kind) {
    case TailEnvelope::Kind::gaussian: {
      const double c = env.rate;
      if (c * u >= 1.0) return 1.0 / (2.0 * c * u);
      return 0.5 * std::sqrt(constants::pi / c);
    }
    case TailEnvelope::Kind::exponential:
      return 1.0 / env.rate;
    default:
      return 1.0;
  }
}

}  // namespace

void ContourPath::validate() const {
  if (nodes.empty()) throw domain_error("ContourPath: needs at least one node");
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (nodes[i] == nodes[i - 1])
      throw domain_error("ContourPath: consecutive nodes must be distinct");
  }
  if (terminal_ray) {
    const double n = std::abs(terminal_ray->direction);
    if (!(std::abs(n - 1.0) < 1e-12))
      throw domain_error("ContourPath: ray direction must be a unit vector");
  }
}

EvalResult integrate_segment(const Kernel& f, Complex z0, Complex z1, double tol,
                             std::optional<PowerSingularity> start_singularity) {
  if (!(tol > 0)) throw domain_error("integrate_segment: tol must be positive");
  if (z0 == z1) return {};
  if (start_singularity) {
    const Complex p = start_singularity->exponent;
    if (!(p.real() > -1.0))
      throw domain_error("integrate_segment: endpoint exponent must have Re > -1");
    return segment_graded(f, z0, z1, tol, p, 20'000'000);
  }
  return segment_plain(f, z0, z1, tol, 20'000'000);
}

EvalResult integrate_ray(const Kernel& f, Complex z0, Complex direction,
                         TailEnvelope envelope, double tol,
                         std::optional<PowerSingularity> origin_singularity) {
  if (envelope.kind == TailEnvelope::Kind::power_oscillatory)
    throw domain_error("integrate_ray: power_oscillatory tails need the oscillatory routine");
  if (!(envelope.rate > 0))
    throw domain_error("integrate_ray: envelope rate must be positive");
  const double dn = std::abs(direction);
  if (!(std::abs(dn - 1.0) < 1e-12))
    throw domain_error("integrate_ray: direction must be a unit vector");

  EvalResult out;
  double u = 0.0;
  if (origin_singularity) {
    EvalResult head = integrate_segment(f, z0, z0 + direction, tol, origin_singularity);
    out.value += head.value;
    out.abs_err += head.abs_err;
    out.n_evals += head.n_evals;
    u = 1.0;
  }

  double h;
  switch (envelope.kind) {
    case TailEnvelope::Kind::gaussian:
      h = std::min(1.0, 1.0 / std::sqrt(envelope.rate));
      break;
    default:
      h = std::min(2.0, 2.0 / envelope.rate);
      break;
  }
  h = std::max(h, 1e-3);

  double m_peak = 0.0;
  double m_prev = -1.0;
  double u_prev = 0.0;
  bool decaying = false;

  for (int win = 0; win < 240; ++win) {
    const double u1 = u + h;
    EvalResult piece =
        integrate_segment(f, z0 + u * direction, z0 + u1 * direction, tol * 0.5);
    out.value += piece.value;
    out.abs_err += piece.abs_err;
    out.n_evals += piece.n_evals;

    const double m1 = std::abs(f(z0 + u1 * direction));
    const double m2 = std::abs(f(z0 + (u + 0.61803398875 * h) * direction));
    out.n_evals += 2;
    const double m = std::max(m1, m2);
    m_peak = std::max(m_peak, m);
    if (m < 0.5 * m_peak) decaying = true;

    if (decaying && m_prev >= 0.0) {
      const double predicted = m_prev * envelope_ratio(envelope, u_prev, u1);
      if (m > 10.0 * predicted && m > 1e-280) {
        throw contract_error("integrate_ray: integrand exceeds 10x the certified envelope");
      }
    }
    m_prev = m;
    u_prev = u1;

    const double tail_bound = 1.5 * m * envelope_tail_factor(envelope, u1);
    const double target = std::max(tol * std::abs(out.value), kAbsFloor);
    if (win >= 1 && tail_bound <= target) {
      out.abs_err += tail_bound;
      out.truncated_at = u1;
      return out;
    }
    u = u1;
    h *= 1.6;
  }
  throw accuracy_error("integrate_ray: tail did not fall under the envelope budget",
                       out.value, out.abs_err);
}

EvalResult integrate_oscillatory_tail(const std::function<Complex(double)>& f,
                                      double x0, double period_hint, double tol) {
  if (!(period_hint > 0))
    throw domain_error("integrate_oscillatory_tail: period hint must be positive");

  constexpr int kMaxSeg = 96;
  constexpr int kMinLevels = 6;

  Kernel k = [&](const Complex& z) { return f(z.real()); };
  std::vector<Complex> partial;
  partial.reserve(kMaxSeg);
  Complex sum{0.0, 0.0};
  EvalResult out;
  double seg_err = 0.0;
  double scale = 0.0;
  double best_diff = std::numeric_limits<double>::infinity();
  int stall = 0;

  for (int kseg = 0; kseg < kMaxSeg; ++kseg) {
    const double a = x0 + kseg * period_hint;
    const double b = a + period_hint;
    EvalResult piece = integrate_segment(k, Complex(a, 0.0), Complex(b, 0.0),
                                         std::min(tol, 1e-9));
    out.n_evals += piece.n_evals;
    seg_err += piece.abs_err;
    sum += piece.value;
    partial.push_back(sum);
    scale = std::max(scale, std::abs(piece.value));

    if (kseg + 1 < kMinLevels + 2) continue;

    // iterated averaging pyramid over the partial sums
    std::vector<Complex> row = partial;
    double diff = std::numeric_limits<double>::infinity();
    Complex accel = row.back();
    int level = 0;
    while (row.size() >= 2 && level < 24) {
      std::vector<Complex> next(row.size() - 1);
      for (std::size_t i = 0; i + 1 < row.size(); ++i)
        next[i] = 0.5 * (row[i] + row[i + 1]);
      row.swap(next);
      ++level;
      if (level >= kMinLevels && row.size() >= 2) {
        const double d = std::abs(row.back() - row[row.size() - 2]);
        if (d < diff) {
          diff = d;
          accel = row.back();
        }
      }
    }
    if (level >= kMinLevels && row.size() == 1 && !std::isfinite(diff)) {
      accel = row[0];
      diff = 0.0;
    }

    const double target = std::max(tol * std::max(std::abs(accel), scale), kAbsFloor);
    if (diff + seg_err <= target || (diff == 0.0 && scale == 0.0)) {
      out.value = accel;
      out.abs_err = 2.0 * diff + seg_err;
      out.truncated_at = b;
      return out;
    }
    if (diff < best_diff * 0.97) {
      best_diff = diff;
      stall = 0;
    } else if (++stall > 16) {
      throw accuracy_error(
          "integrate_oscillatory_tail: averaging differences stopped shrinking",
          sum, best_diff);
    }
    out.value = accel;
    out.abs_err = 2.0 * diff + seg_err;
    out.truncated_at = b;
  }
  if (out.abs_err > 1e3 * std::max(tol * std::abs(out.value), kAbsFloor)) {
    throw accuracy_error("integrate_oscillatory_tail: ran out of segments",
                         out.value, out.abs_err);
  }
  return out;
}

EvalResult integrate_path(const Kernel& f, const ContourPath& path, double tol,
                          std::optional<PowerSingularity> start_singularity,
                          std::optional<TailEnvelope> ray_envelope) {
  path.validate();
  EvalResult out;
  for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
    auto sing = (i == 0) ? start_singularity : std::nullopt;
    EvalResult piece =
        integrate_segment(f, path.nodes[i], path.nodes[i + 1], tol, sing);
    out.value += piece.value;
    out.abs_err += piece.abs_err;
    out.n_evals += piece.n_evals;
  }
  if (path.terminal_ray) {
    if (!ray_envelope)
      throw domain_error("integrate_path: terminal ray requires an envelope");
    auto sing = (path.nodes.size() == 1) ? start_singularity : std::nullopt;
    EvalResult tail = integrate_ray(f, path.nodes.back(),
                                    path.terminal_ray->direction, *ray_envelope,
                                    tol, sing);
    out.value += tail.value;
    out.abs_err += tail.abs_err;
    out.n_evals += tail.n_evals;
    out.truncated_at = tail.truncated_at;
  }
  return out;
}

}  // namespace raux::quad
