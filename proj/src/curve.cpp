#include "holobraid/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace holobraid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_param(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

double cyclic_distance(double a, double b) {
  const double d = std::abs(wrap_param(a) - wrap_param(b));
  return std::min(d, kTwoPi - d);
}

// f plus its first three derivatives.
struct JetSeries {
  FourierSeries f0, f1, f2, f3;
  explicit JetSeries(const FourierSeries& f)
      : f0(f), f1(f.derivative()), f2(f1.derivative()), f3(f2.derivative()) {}
};

// Newton with a bisection fallback inside a bracketing interval.
double refine_root(const FourierSeries& g, const FourierSeries& gp, double a, double b,
                   double va, double vb, const CurveConfig& cfg) {
  double x = 0.5 * (a + b);
  for (int it = 0; it < cfg.newton_max_iter && (b - a) > cfg.root_tol; ++it) {
    const double vx = g.eval(x);
    if (vx == 0.0) return x;
    if ((va < 0) == (vx < 0)) {
      a = x;
      va = vx;
    } else {
      b = x;
      vb = vx;
    }
    const double d = gp.eval(x);
    double next = x - vx / d;
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    x = next;
  }
  (void)vb;
  return x;
}

}  // namespace

Jet3 eval_jet(const FourierSeries& f, double t) {
  const JetSeries js(f);
  Jet3 j;
  j.x = -js.f0.eval(t);
  j.y = js.f1.eval(t);
  j.z = -js.f2.eval(t);
  j.dx = -js.f1.eval(t);
  j.dy = js.f2.eval(t);
  j.dz = -js.f3.eval(t);
  return j;
}

std::vector<double> zeros_on_cycle(const FourierSeries& f, DerivOrder which,
                                   const CurveConfig& cfg) {
  FourierSeries g = f;
  for (int d = 0; d < static_cast<int>(which); ++d) g = g.derivative();
  const FourierSeries gp = g.derivative();
  if (!g.nonzero()) throw DegenerateInputError("zeros_on_cycle: the function is identically 0");

  const int n = cfg.samples;
  const double h = kTwoPi / n;
  std::vector<double> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = g.eval(i * h);

  const double scale = std::max(1.0, sup_bound(g));
  const double slope_scale = std::max(1.0, sup_bound(gp));

  std::vector<double> roots;
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0.0) {
      roots.push_back(wrap_param(i * h));
    } else if (v[i + 1] != 0.0 && (v[i] < 0) != (v[i + 1] < 0)) {
      roots.push_back(refine_root(g, gp, i * h, (i + 1) * h, v[i], v[i + 1], cfg));
    }
  }

  // Tangential contact: a grid point that nearly vanishes with no sign change
  // nearby means a non-simple zero.
  for (int i = 0; i < n; ++i) {
    if (std::abs(v[i]) < 1e-9 * scale && v[i] != 0.0) {
      bool near_root = false;
      for (double r : roots) {
        if (cyclic_distance(r, i * h) < 2 * h) near_root = true;
      }
      if (!near_root) {
        throw DegenerateInputError("zeros_on_cycle: tangential zero near t=" +
                                   std::to_string(i * h));
      }
    }
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots) {
    if (!out.empty() && cyclic_distance(out.back(), r) < cfg.dedupe_tol) continue;
    if (!out.empty() && cyclic_distance(out.front(), r) < cfg.dedupe_tol) continue;
    out.push_back(wrap_param(r));
  }

  for (double r : out) {
    if (std::abs(gp.eval(r)) <= 1e-6 * slope_scale) {
      throw DegenerateInputError("zeros_on_cycle: non-simple zero at t=" + std::to_string(r));
    }
  }
  return out;
}

DoublePointScan double_points(const FourierSeries& f, const CurveConfig& cfg) {
  const JetSeries js(f);
  DoublePointScan scan;
  const int n = cfg.samples;
  const double h = kTwoPi / n;

  std::vector<double> fv(n + 1), f1v(n + 1);
  for (int i = 0; i <= n; ++i) {
    fv[i] = js.f0.eval(i * h);
    f1v[i] = js.f1.eval(i * h);
  }
  const double scale0 = std::max(1.0, sup_bound(js.f0));
  const double scale1 = std::max(1.0, sup_bound(js.f1));
  // Lipschitz margins so a zero crossing cannot slip through a cell corner test.
  const double margin0 = 1.5 * sup_bound(js.f1) * h;
  const double margin1 = 1.5 * sup_bound(js.f2) * h;

  const int excl = std::max(4, n / 512);  // cells skipped around the diagonal
  const double min_sep = std::max(4.0 * h, 1e-4);

  auto newton2 = [&](double t1, double t2) -> std::optional<std::pair<double, double>> {
    for (int it = 0; it < cfg.newton_max_iter; ++it) {
      const double g1 = js.f0.eval(t1) - js.f0.eval(t2);
      const double g2 = js.f1.eval(t1) - js.f1.eval(t2);
      const double a11 = js.f1.eval(t1), a12 = -js.f1.eval(t2);
      const double a21 = js.f2.eval(t1), a22 = -js.f2.eval(t2);
      const double det = a11 * a22 - a12 * a21;
      if (std::abs(det) < 1e-14 * scale1 * scale1) return std::nullopt;
      const double s1 = (g1 * a22 - g2 * a12) / det;
      const double s2 = (a11 * g2 - a21 * g1) / det;
      t1 -= s1;
      t2 -= s2;
      if (std::abs(s1) < 1e-13 && std::abs(s2) < 1e-13) {
        const double r1 = js.f0.eval(t1) - js.f0.eval(t2);
        const double r2 = js.f1.eval(t1) - js.f1.eval(t2);
        if (std::abs(r1) <= cfg.match_tol * scale0 && std::abs(r2) <= cfg.match_tol * scale1) {
          return std::make_pair(t1, t2);
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  };

  std::vector<std::pair<double, double>> found;
  for (int i = 0; i < n; ++i) {
    for (int j = i + excl; j < n; ++j) {
      if (n - (j - i) < excl) continue;  // cyclically near the diagonal
      // corner ranges of g1 = f(t1)-f(t2) and g2 = f'(t1)-f'(t2)
      double lo1 = 1e300, hi1 = -1e300, lo2 = 1e300, hi2 = -1e300;
      for (int ci = 0; ci < 2; ++ci) {
        for (int cj = 0; cj < 2; ++cj) {
          const double g1 = fv[i + ci] - fv[j + cj];
          const double g2 = f1v[i + ci] - f1v[j + cj];
          lo1 = std::min(lo1, g1);
          hi1 = std::max(hi1, g1);
          lo2 = std::min(lo2, g2);
          hi2 = std::max(hi2, g2);
        }
      }
      if (lo1 > margin0 || hi1 < -margin0 || lo2 > margin1 || hi2 < -margin1) continue;
      const bool strong = (lo1 <= 0 && hi1 >= 0 && lo2 <= 0 && hi2 >= 0);
      const auto sol = newton2((i + 0.5) * h, (j + 0.5) * h);
      if (!sol) {
        if (strong) {
          scan.diagnostics.push_back("newton did not converge from cell (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
        }
        continue;
      }
      double t1 = wrap_param(sol->first), t2 = wrap_param(sol->second);
      if (t1 > t2) std::swap(t1, t2);
      if (cyclic_distance(t1, t2) < min_sep) continue;
      found.emplace_back(t1, t2);
    }
  }

  std::sort(found.begin(), found.end());
  for (const auto& [t1, t2] : found) {
    bool dup = false;
    for (const auto& dp : scan.points) {
      if (cyclic_distance(dp.t1, t1) < cfg.dedupe_tol &&
          cyclic_distance(dp.t2, t2) < cfg.dedupe_tol) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    DoublePoint dp;
    dp.t1 = t1;
    dp.t2 = t2;
    dp.x = -js.f0.eval(t1);
    dp.y = js.f1.eval(t1);
    dp.upper = dp.y > 0;
    dp.sign = dp.upper ? -1 : +1;
    scan.points.push_back(dp);
  }
  return scan;
}

int crossing_sign(const FourierSeries& f, const DoublePoint& dp, const CurveConfig& cfg) {
  const JetSeries js(f);
  const double y = js.f1.eval(dp.t1);
  if (std::abs(y) <= cfg.axis_tol) {
    throw DegenerateInputError("crossing_sign: double point on the x axis (condition 2)");
  }
  const int half_plane_sign = y > 0 ? -1 : +1;

  // Direct route: the branch with larger z = -f'' is the over strand; the
  // sign is the orientation of (over tangent, under tangent).
  const double z1 = -js.f2.eval(dp.t1), z2 = -js.f2.eval(dp.t2);
  if (std::abs(z1 - z2) <= cfg.match_tol) {
    throw DegenerateInputError("crossing_sign: branches share their z value (condition 1)");
  }
  const double to = z1 > z2 ? dp.t1 : dp.t2;
  const double tu = z1 > z2 ? dp.t2 : dp.t1;
  const double ux = -js.f1.eval(to), uy = js.f2.eval(to);
  const double wx = -js.f1.eval(tu), wy = js.f2.eval(tu);
  const double det = ux * wy - uy * wx;
  const int frame_sign = det > 0 ? +1 : -1;

  if (frame_sign != half_plane_sign) {
    throw DegenerateInputError("crossing_sign: half-plane rule and frame sign disagree");
  }
  return half_plane_sign;
}

GenericityReport genericity_report(const FourierSeries& f, const CurveConfig& cfg) {
  GenericityReport rep;
  const JetSeries js(f);
  auto scan = double_points(f, cfg);
  rep.points = std::move(scan.points);
  rep.diagnostics = std::move(scan.diagnostics);

  // (1) embeddedness: branches of a projected double point must differ in z
  for (const auto& dp : rep.points) {
    const double gap = std::abs(js.f2.eval(dp.t1) - js.f2.eval(dp.t2));
    if (gap <= cfg.match_tol) {
      rep.embedded.pass = false;
      rep.embedded.detail = "double point (t1=" + std::to_string(dp.t1) +
                            ", t2=" + std::to_string(dp.t2) + ") has matching z";
    }
  }
  // (2) double points keep off the x axis
  for (const auto& dp : rep.points) {
    if (std::abs(dp.y) <= cfg.axis_tol) {
      rep.off_axis.pass = false;
      rep.off_axis.detail =
          "double point at t1=" + std::to_string(dp.t1) + " lies on the x axis";
    }
  }
  // (3) no triple points: two double points sharing a parameter
  for (std::size_t a = 0; a < rep.points.size() && rep.no_triple.pass; ++a) {
    for (std::size_t b = a + 1; b < rep.points.size(); ++b) {
      const double ts_a[2] = {rep.points[a].t1, rep.points[a].t2};
      const double ts_b[2] = {rep.points[b].t1, rep.points[b].t2};
      for (double ta : ts_a) {
        for (double tb : ts_b) {
          if (cyclic_distance(ta, tb) < cfg.cluster_tol) {
            rep.no_triple.pass = false;
            rep.no_triple.detail =
                "parameters cluster near t=" + std::to_string(ta) + " (triple point)";
          }
        }
      }
    }
  }
  // (4) equal zero counts of f and f'
  try {
    rep.zeros_f = static_cast<int>(zeros_on_cycle(f, DerivOrder::F, cfg).size());
    rep.zeros_fprime = static_cast<int>(zeros_on_cycle(f, DerivOrder::F1, cfg).size());
    if (rep.zeros_f != rep.zeros_fprime) {
      rep.zero_balance.pass = false;
      rep.zero_balance.detail = "f has " + std::to_string(rep.zeros_f) +
                                " zeros but f' has " + std::to_string(rep.zeros_fprime);
    } else if (rep.zeros_f % 2 != 0) {
      rep.zero_balance.pass = false;
      rep.zero_balance.detail = "odd zero count " + std::to_string(rep.zeros_f);
    }
  } catch (const DegenerateInputError& e) {
    rep.zero_balance.pass = false;
    rep.zero_balance.detail = e.what();
  }
  if (rep.zero_balance.pass) rep.braid_index = rep.zeros_f / 2;
  return rep;
}

double braid_axis_point(const FourierSeries& f, const CurveConfig& cfg) {
  const JetSeries js(f);
  const auto crossings = zeros_on_cycle(f, DerivOrder::F1, cfg);
  double max_down = -1e300, min_up = 1e300;  // x positions by winding direction
  int ups = 0, downs = 0;
  for (double t : crossings) {
    const double x = -js.f0.eval(t);
    const double curv = js.f2.eval(t);
    if (curv > 0) {  // crossing the axis upward: must sit right of the center
      min_up = std::min(min_up, x);
      ++ups;
    } else {
      max_down = std::max(max_down, x);
      ++downs;
    }
  }
  if (ups == 0 || downs == 0) {
    throw DegenerateInputError("braid_axis_point: axis crossings all wind one way");
  }
  if (min_up <= max_down) {
    std::ostringstream os;
    os << "no separating point: upward crossings reach x=" << min_up
       << " while downward crossings reach x=" << max_down;
    throw NoSeparatingPointError(os.str());
  }
  return 0.5 * (min_up + max_down);
}

namespace {

struct AngleTable {
  std::vector<double> t;      // sample parameters, t[0]=0 .. t[n]=2*pi
  std::vector<double> alpha;  // lifted polar angle about (c, 0)
  const JetSeries* js;
  double c;

  double rate(double at) const {
    const double fx = js->f0.eval(at), fy = js->f1.eval(at), fz = js->f2.eval(at);
    const double px = -fx - c, py = fy;
    return (fy * fy - (fx + c) * fz) / (px * px + py * py);
  }

  // Inverse of the strictly increasing lifted angle.
  double param_at(double target) const {
    auto it = std::upper_bound(alpha.begin(), alpha.end(), target);
    std::size_t hi = std::min<std::size_t>(alpha.size() - 1, it - alpha.begin());
    std::size_t lo = hi == 0 ? 0 : hi - 1;
    double a = t[lo], b = t[hi];
    double x = 0.5 * (a + b);
    for (int iter = 0; iter < 80 && (b - a) > 1e-13; ++iter) {
      const double vx = lifted_between(lo, x);
      if (vx < target) {
        a = x;
      } else {
        b = x;
      }
      const double d = rate(x);
      double next = x - (vx - target) / d;
      if (!(next > a && next < b)) next = 0.5 * (a + b);
      x = next;
    }
    return x;
  }

  // Lifted angle at x in [t[lo], t[lo+1]]: the 2*pi branch of the raw angle
  // nearest to a linear reference off sample lo (one step is always < pi).
  double lifted_between(std::size_t lo, double x) const {
    const double fx = js->f0.eval(x), fy = js->f1.eval(x);
    const double raw = std::atan2(fy, -fx - c);
    const std::size_t next = std::min(lo + 1, alpha.size() - 1);
    const double slope =
        next > lo ? (alpha[next] - alpha[lo]) / (t[next] - t[lo]) : rate(t[lo]);
    const double ref = alpha[lo] + (x - t[lo]) * slope;
    return raw + kTwoPi * std::round((ref - raw) / kTwoPi);
  }
};

}  // namespace

BraidWord extract_braid(const FourierSeries& f, const CurveConfig& cfg) {
  const auto rep = genericity_report(f, cfg);
  if (!rep.all_pass()) {
    std::string why;
    for (const auto* c : {&rep.embedded, &rep.off_axis, &rep.no_triple, &rep.zero_balance}) {
      if (!c->pass) why += (why.empty() ? "" : "; ") + c->detail;
    }
    throw DegenerateInputError("extract_braid: genericity conditions fail: " + why);
  }
  const double c = braid_axis_point(f, cfg);
  const int b = *rep.braid_index;
  const JetSeries js(f);

  // Lifted polar angle about (c, 0); the projection winds anticlockwise.
  const int n = cfg.samples;
  const double h = kTwoPi / n;
  AngleTable table;
  table.js = &js;
  table.c = c;
  table.t.resize(n + 1);
  table.alpha.resize(n + 1);
  double prev_raw = std::atan2(js.f1.eval(0.0), -js.f0.eval(0.0) - c);
  table.t[0] = 0.0;
  table.alpha[0] = prev_raw;
  for (int i = 1; i <= n; ++i) {
    const double at = i * h;
    const double raw = std::atan2(js.f1.eval(at), -js.f0.eval(at) - c);
    double step = raw - prev_raw;
    while (step <= -std::numbers::pi) step += kTwoPi;
    while (step > std::numbers::pi) step -= kTwoPi;
    if (step <= 0) {
      throw DegenerateInputError("extract_braid: polar angle is not strictly increasing at t=" +
                                 std::to_string(at));
    }
    table.t[i] = at;
    table.alpha[i] = table.alpha[i - 1] + step;
    prev_raw = raw;
  }
  const double total = table.alpha[n] - table.alpha[0];
  if (std::abs(total - kTwoPi * b) > 1e-6) {
    throw DegenerateInputError("extract_braid: winding number " +
                               std::to_string(total / kTwoPi) + " does not match braid index " +
                               std::to_string(b));
  }

  if (rep.points.empty()) return BraidWord(b, {});

  // One event per double point, positioned by its circle angle.
  struct Event {
    double station = 0;  // circle angle in [0, 2*pi)
    double t1 = 0, t2 = 0;
    int sign = 0;
  };
  std::vector<Event> events;
  for (const auto& dp : rep.points) {
    Event e;
    const double a1 = table.lifted_between(
        std::min<std::size_t>(static_cast<std::size_t>(dp.t1 / h), n - 1), dp.t1);
    e.station = wrap_param(a1);
    e.t1 = dp.t1;
    e.t2 = dp.t2;
    e.sign = crossing_sign(f, dp, cfg);
    events.push_back(e);
  }

  // Cut the closed braid in the widest angular gap between crossings.
  std::vector<double> stations;
  for (const auto& e : events) stations.push_back(e.station);
  std::sort(stations.begin(), stations.end());
  double best_gap = -1, cut = 0;
  for (std::size_t k = 0; k < stations.size(); ++k) {
    const double a = stations[k];
    const double b2 = k + 1 < stations.size() ? stations[k + 1] : stations[0] + kTwoPi;
    if (b2 - a > best_gap) {
      best_gap = b2 - a;
      cut = wrap_param(0.5 * (a + b2));
    }
  }
  std::sort(events.begin(), events.end(), [&](const Event& a, const Event& b2) {
    return wrap_param(a.station - cut) < wrap_param(b2.station - cut);
  });

  // Shortest angular distance to the next event bounds the probe offset.
  double min_gap = kTwoPi;
  for (std::size_t k = 0; k + 1 < stations.size(); ++k) {
    min_gap = std::min(min_gap, stations[k + 1] - stations[k]);
  }
  if (stations.size() > 1) {
    min_gap = std::min(min_gap, stations.front() + kTwoPi - stations.back());
  }

  // The b strand parameters whose lifted angle hits `station` (mod 2*pi).
  auto strands_at = [&](double station) {
    std::vector<double> ts;
    double base = table.alpha[0] + wrap_param(station - table.alpha[0]);
    for (int k = 0; k < b; ++k) {
      const double target = base + kTwoPi * k;
      if (target >= table.alpha[n]) break;
      ts.push_back(table.param_at(target));
    }
    return ts;
  };
  auto radius = [&](double at) {
    const double px = -js.f0.eval(at) - c, py = js.f1.eval(at);
    return std::hypot(px, py);
  };

  std::vector<int> letters;
  for (const auto& e : events) {
    double eps = std::min(min_gap / 4, 1e-3);
    std::optional<int> idx;
    for (int attempt = 0; attempt < cfg.max_refine_retries && !idx; ++attempt, eps /= 4) {
      const auto ts = strands_at(wrap_param(e.station - eps));
      if (static_cast<int>(ts.size()) != b) continue;
      // identify the two crossing branches among the strands
      int ia = -1, ib = -1;
      double da = 1e300, db = 1e300;
      for (int k = 0; k < b; ++k) {
        const double d1 = cyclic_distance(ts[k], e.t1);
        const double d2 = cyclic_distance(ts[k], e.t2);
        if (d1 < da) {
          da = d1;
          ia = k;
        }
        if (d2 < db) {
          db = d2;
          ib = k;
        }
      }
      if (ia < 0 || ib < 0 || ia == ib) continue;
      const double ra = radius(ts[ia]), rb = radius(ts[ib]);
      int below = 0;
      bool ambiguous = false;
      const double pair_gap = std::abs(ra - rb);
      const double lo = std::min(ra, rb), hi = std::max(ra, rb);
      for (int k = 0; k < b; ++k) {
        if (k == ia || k == ib) continue;
        const double r = radius(ts[k]);
        if (r > lo - pair_gap && r < hi + pair_gap) {
          ambiguous = true;  // a third strand inside the crossing window
          break;
        }
        if (r < lo) ++below;
      }
      if (ambiguous) continue;
      idx = below + 1;
    }
    if (!idx) {
      throw DegenerateInputError(
          "extract_braid: strand order ambiguous at a crossing after retries");
    }
    letters.push_back(*idx * e.sign);
  }
  return BraidWord(b, letters);
}

std::string curve_csv(const FourierSeries& f, int samples) {
  const JetSeries js(f);
  std::ostringstream os;
  os.precision(17);
  os << "t,x,y,z\n";
  for (int i = 0; i < samples; ++i) {
    const double t = kTwoPi * i / samples;
    os << t << ',' << -js.f0.eval(t) << ',' << js.f1.eval(t) << ',' << -js.f2.eval(t)
       << '\n';
  }
  return os.str();
}

}  // namespace holobraid
