#include "relaysec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace relaysec {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  double value;
  double error;
};

Segment eval_segment(const std::function<double(double)>& f, double a,
                     double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double result_gauss = kWg[3] * fc;
  double result_kronrod = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(center - dx) + f(center + dx);
    result_kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
  }
  const double value = result_kronrod * half;
  const double error = std::abs((result_kronrod - result_gauss) * half);
  return {a, b, value, error};
}

}  // namespace

double integrate_finite(const std::function<double(double)>& f, double a,
                        double b, const QuadSpec& spec) {
  if (!(a <= b)) {
    throw std::invalid_argument("integrate_finite: requires a <= b");
  }
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) ||
      spec.max_subdivisions < 1) {
    throw std::invalid_argument("integrate_finite: invalid QuadSpec");
  }
  if (a == b) return 0.0;

  std::vector<Segment> segs;
  segs.reserve(64);
  segs.push_back(eval_segment(f, a, b));

  for (;;) {
    double total = 0.0;
    double err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      total += segs[i].value;
      err += segs[i].error;
      if (segs[i].error > segs[worst].error) worst = i;
    }
    if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
      return total;
    }
    if (static_cast<int>(segs.size()) > spec.max_subdivisions) {
      throw QuadratureError("integrate_finite: tolerance not reached", total,
                            err);
    }
    const Segment s = segs[worst];
    const double mid = 0.5 * (s.a + s.b);
    if (mid <= s.a || mid >= s.b) {
      // interval at roundoff width; no further progress possible
      throw QuadratureError("integrate_finite: interval exhausted", total,
                            err);
    }
    segs[worst] = eval_segment(f, s.a, mid);
    segs.push_back(eval_segment(f, mid, s.b));
  }
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double a, double decay_scale,
                               const QuadSpec& spec, int tail_multiples) {
  if (!std::isfinite(a)) {
    // degenerate lower limit: nothing left of the tail cutoff
    return 0.0;
  }
  if (!(decay_scale > 0.0)) {
    throw std::invalid_argument(
        "integrate_semi_infinite: decay_scale must be positive");
  }
  if (tail_multiples < 1) {
    throw std::invalid_argument(
        "integrate_semi_infinite: tail_multiples must be >= 1");
  }

  // geometrically graded cuts, in units of the decay scale
  std::vector<double> cuts;
  cuts.push_back(0.0);
  for (double c = 1.0; c < tail_multiples; c *= 2.0) cuts.push_back(c);
  cuts.push_back(static_cast<double>(tail_multiples));

  QuadSpec seg_spec = spec;
  seg_spec.abs_tol = spec.abs_tol / static_cast<double>(cuts.size() - 1);

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = a + cuts[i] * decay_scale;
    const double hi = a + cuts[i + 1] * decay_scale;
    total += integrate_finite(f, lo, hi, seg_spec);
  }
  return total;
}

}  // namespace relaysec
