#include "holobraid/legendrian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace holobraid {

namespace {

double ipow(double x, int e) {
  double acc = 1.0;
  for (int j = 0; j < e; ++j) acc *= x;
  return acc;
}

}  // namespace

CousinJet cousin_jet(const CousinParams& p, double t) {
  if (p.k < 0) throw Error("cousin_jet: k must be nonnegative");
  CousinJet j;
  if (p.k == 0) {
    const auto h = eval_jet(p.base, t);
    j.x = h.x;
    j.v = h.y;
    j.z = h.z;
    j.dx = h.dx;
    j.dv = h.dy;
    j.dz = h.dz;
    return j;
  }
  const FourierSeries f1 = p.base.derivative();
  const FourierSeries f2 = f1.derivative();
  const FourierSeries f3 = f2.derivative();
  const double y = f1.eval(t), y1 = f2.eval(t), y2 = f3.eval(t);
  const int e = 2 * p.k + 1;
  j.x = -p.base.eval(t);
  j.v = ipow(y, e);
  j.z = -e * ipow(y, e - 2) * y1;
  j.dx = -y;
  j.dv = e * ipow(y, e - 1) * y1;
  j.dz = -e * ((e - 2) * ipow(y, e - 3) * y1 * y1 + ipow(y, e - 2) * y2);
  return j;
}

double tangency_residual(std::span<const TangentSample> samples, ContactForm form,
                         double y_floor) {
  double worst = 0.0;
  for (const auto& s : samples) {
    double residual, scale;
    if (form == ContactForm::Alpha) {
      residual = std::abs(s.z * s.dx - s.dw);
      scale = std::max({1.0, std::abs(s.z * s.dx), std::abs(s.dw)});
    } else {
      if (std::abs(s.w) <= y_floor) {
        throw DegenerateInputError(
            "tangency_residual: beta sample on the plane y = 0");
      }
      residual = std::abs(s.z * s.dx - s.w * s.dw);
      scale = std::max({1.0, std::abs(s.z * s.dx), std::abs(s.w * s.dw)});
    }
    worst = std::max(worst, residual / scale);
  }
  return worst;
}

std::vector<TangentSample> sample_cousin(const CousinParams& p, int samples) {
  std::vector<TangentSample> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = 2.0 * std::numbers::pi * i / samples;
    const auto j = cousin_jet(p, t);
    out.push_back({j.x, j.v, j.z, j.dx, j.dv});
  }
  return out;
}

std::vector<TangentSample> sample_holonomic(const FourierSeries& f, int samples) {
  std::vector<TangentSample> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = 2.0 * std::numbers::pi * i / samples;
    const auto j = eval_jet(f, t);
    out.push_back({j.x, j.y, j.z, j.dx, j.dy});
  }
  return out;
}

FrontDiagram front_diagram(const CousinParams& p, const CurveConfig& cfg) {
  if (p.k < 1) {
    throw Error("front_diagram: k = 0 is the holonomic curve, not a front");
  }
  const auto rep = genericity_report(p.base, cfg);
  if (!rep.all_pass()) {
    throw DegenerateInputError("front_diagram: base function fails genericity");
  }
  FrontDiagram d;
  d.cusps = zeros_on_cycle(p.base, DerivOrder::F1, cfg);
  if (d.cusps.size() % 2 != 0) {
    throw DegenerateInputError("front_diagram: odd cusp count");
  }
  for (const auto& dp : rep.points) {
    // odd powers are strictly monotone, so f'(t1)=f'(t2) pins the same pairs
    const auto j1 = cousin_jet(p, dp.t1);
    const auto j2 = cousin_jet(p, dp.t2);
    FrontCrossing c;
    c.t1 = dp.t1;
    c.t2 = dp.t2;
    c.x = j1.x;
    c.v = j1.v;
    c.sign = front_crossing_sign({j1.z, j1.dx, j1.dv}, {j2.z, j2.dx, j2.dv});
    d.crossings.push_back(c);
  }
  return d;
}

int front_crossing_sign(const FrontBranch& b1, const FrontBranch& b2, double slope_tol) {
  const double scale = std::max({1.0, std::abs(b1.z), std::abs(b2.z)});
  if (std::abs(b1.z - b2.z) < slope_tol * scale) {
    throw DegenerateInputError("front_crossing_sign: branches are tangent");
  }
  if (std::abs(b1.dx) < slope_tol || std::abs(b2.dx) < slope_tol) {
    throw DegenerateInputError("front_crossing_sign: vertical tangency at a crossing");
  }
  const int rule_sign = (b1.dx > 0) == (b2.dx > 0) ? -1 : +1;

  // Over/under route: larger z is the over strand; the sign is the
  // orientation of (over tangent, under tangent) in the front plane.
  const FrontBranch& over = b1.z > b2.z ? b1 : b2;
  const FrontBranch& under = b1.z > b2.z ? b2 : b1;
  const double det = over.dx * under.dv - over.dv * under.dx;
  const int frame_sign = det > 0 ? +1 : -1;
  if (rule_sign != frame_sign) {
    throw DegenerateInputError(
        "front_crossing_sign: vertical-line rule and frame sign disagree");
  }
  return rule_sign;
}

Point3 half_space_map(const Point3& p) { return {p.x, 0.5 * p.y * p.y, p.z}; }

CousinJet dasbach_isotopy_jet(const FourierSeries& f, int k, int m, double s, double t,
                              bool verbatim) {
  if (k < 1 || m < 1) {
    throw Error("dasbach_isotopy_jet: k, m must be >= 1 (the z term has exponent 2k-1)");
  }
  const FourierSeries f1 = f.derivative();
  const FourierSeries f2 = f1.derivative();
  const FourierSeries f3 = f2.derivative();
  const double y = f1.eval(t), y1 = f2.eval(t), y2 = f3.eval(t);
  const int ek = 2 * k + 1, em = 2 * m + 1;
  CousinJet j;
  j.x = -f.eval(t);
  j.dx = -y;
  j.v = s * ipow(y, ek) + (1 - s) * ipow(y, em);
  j.dv = s * ek * ipow(y, ek - 1) * y1 + (1 - s) * em * ipow(y, em - 1) * y1;
  const int c2 = verbatim ? ek : em;  // published text keeps (2k+1) in both terms
  j.z = -s * ek * ipow(y, ek - 2) * y1 - (1 - s) * c2 * ipow(y, em - 2) * y1;
  j.dz = -s * ek * ((ek - 2) * ipow(y, ek - 3) * y1 * y1 + ipow(y, ek - 2) * y2) -
         (1 - s) * c2 * ((em - 2) * ipow(y, em - 3) * y1 * y1 + ipow(y, em - 2) * y2);
  return j;
}

std::vector<TangentSample> sample_dasbach(const FourierSeries& f, int k, int m, double s,
                                          int samples, bool verbatim) {
  std::vector<TangentSample> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = 2.0 * std::numbers::pi * i / samples;
    const auto j = dasbach_isotopy_jet(f, k, m, s, t, verbatim);
    out.push_back({j.x, j.v, j.z, j.dx, j.dv});
  }
  return out;
}

}  // namespace holobraid
