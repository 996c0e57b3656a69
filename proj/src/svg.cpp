#include "holobraid/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace holobraid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct PlanarCurve {
  std::vector<double> x, y;          // samples over [0, 2*pi)
  std::vector<double> cut_lo, cut_hi;  // parameter windows hidden at crossings
  std::vector<std::pair<double, double>> cusp_points;
  std::vector<std::pair<double, double>> markers;  // extra dots (winding center)
  bool draw_axis = false;
  bool uniform_scale = true;  // fronts stretch axes independently
};

struct Scales {
  double sx = 1, sy = 1;
};

Scales fit_scales(double spanx, double spany, const SvgOptions& opt, bool uniform) {
  const double box = opt.width - 2 * opt.margin;
  if (uniform) {
    const double s = box / std::max({spanx, spany, 1e-9});
    return {s, s};
  }
  return {box / std::max(spanx, 1e-9), box / std::max(spany, 1e-9)};
}

bool in_cut(const PlanarCurve& c, double t) {
  for (std::size_t j = 0; j < c.cut_lo.size(); ++j) {
    double lo = c.cut_lo[j], hi = c.cut_hi[j];
    if (lo <= hi) {
      if (t >= lo && t <= hi) return true;
    } else {  // wrapped window
      if (t >= lo || t <= hi) return true;
    }
  }
  return false;
}

std::string render(const PlanarCurve& c, const SvgOptions& opt) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    xmin = std::min(xmin, c.x[i]);
    xmax = std::max(xmax, c.x[i]);
    ymin = std::min(ymin, c.y[i]);
    ymax = std::max(ymax, c.y[i]);
  }
  if (c.draw_axis) {
    ymin = std::min(ymin, 0.0);
    ymax = std::max(ymax, 0.0);
  }
  const double spanx = std::max(xmax - xmin, 1e-9);
  const double spany = std::max(ymax - ymin, 1e-9);
  const auto [sx, sy] = fit_scales(spanx, spany, opt, c.uniform_scale);
  const double width = spanx * sx + 2 * opt.margin;
  const double height = spany * sy + 2 * opt.margin;
  auto px = [&](double x) { return opt.margin + (x - xmin) * sx; };
  // svg's y axis points down
  auto py = [&](double y) { return height - opt.margin - (y - ymin) * sy; };

  std::ostringstream os;
  os.precision(8);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (c.draw_axis) {
    os << "<line x1=\"0\" y1=\"" << py(0.0) << "\" x2=\"" << width << "\" y2=\"" << py(0.0)
       << "\" stroke=\"#999\" stroke-dasharray=\"6 4\" stroke-width=\"1\"/>\n";
  }

  // split the cyclic sample sequence into visible runs between cut windows
  const int n = static_cast<int>(c.x.size());
  const double h = kTwoPi / n;
  std::vector<bool> vis(n);
  int first_hidden = -1;
  for (int i = 0; i < n; ++i) {
    vis[i] = !in_cut(c, i * h);
    if (!vis[i] && first_hidden < 0) first_hidden = i;
  }
  std::vector<std::vector<int>> runs;
  if (first_hidden < 0) {
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i % n;
    runs.push_back(std::move(all));
  } else {
    std::vector<int> cur;
    for (int k = 1; k <= n; ++k) {
      const int idx = (first_hidden + k) % n;
      if (vis[idx]) {
        cur.push_back(idx);
      } else if (cur.size() > 1) {
        runs.push_back(std::move(cur));
        cur.clear();
      } else {
        cur.clear();
      }
    }
    if (cur.size() > 1) runs.push_back(std::move(cur));
  }

  for (const auto& run : runs) {
    os << "<path fill=\"none\" stroke=\"black\" stroke-width=\"" << opt.stroke
       << "\" stroke-linecap=\"round\" d=\"";
    for (std::size_t j = 0; j < run.size(); ++j) {
      os << (j == 0 ? 'M' : 'L') << px(c.x[run[j]]) << ' ' << py(c.y[run[j]]);
    }
    os << "\"/>\n";
  }
  for (const auto& [cx, cy] : c.cusp_points) {
    os << "<circle cx=\"" << px(cx) << "\" cy=\"" << py(cy)
       << "\" r=\"3\" fill=\"black\"/>\n";
  }
  for (const auto& [mx, my] : c.markers) {
    os << "<circle cx=\"" << px(mx) << "\" cy=\"" << py(my)
       << "\" r=\"3.2\" fill=\"none\" stroke=\"#c00\" stroke-width=\"1.4\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// Parameter half-width hiding `gap_px` of on-screen arc length around t;
// never less than a few sample spacings so the break stays visible.
double window_halfwidth(double gap_px, double speed_px, int samples) {
  return std::max(0.5 * gap_px / std::max(speed_px, 1e-9), 2.5 * kTwoPi / samples);
}

}  // namespace

std::string render_projection_svg(const FourierSeries& f, const CurveConfig& cfg,
                                  const SvgOptions& opt) {
  const FourierSeries f1 = f.derivative();
  const FourierSeries f2 = f1.derivative();
  PlanarCurve c;
  c.draw_axis = true;
  c.x.resize(opt.samples);
  c.y.resize(opt.samples);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (int i = 0; i < opt.samples; ++i) {
    const double t = kTwoPi * i / opt.samples;
    c.x[i] = -f.eval(t);
    c.y[i] = f1.eval(t);
    xmin = std::min(xmin, c.x[i]);
    xmax = std::max(xmax, c.x[i]);
    ymin = std::min(ymin, c.y[i]);
    ymax = std::max(ymax, c.y[i]);
  }
  const auto scales = fit_scales(xmax - xmin, std::max(ymax, 0.0) - std::min(ymin, 0.0),
                                 opt, /*uniform=*/true);

  for (const auto& dp : double_points(f, cfg).points) {
    // the under strand has the smaller z = -f''
    const double tu = f2.eval(dp.t1) > f2.eval(dp.t2) ? dp.t1 : dp.t2;
    const double speed_px =
        std::hypot(scales.sx * f1.eval(tu), scales.sy * f2.eval(tu));
    const double hw = window_halfwidth(opt.gap, speed_px, opt.samples);
    double lo = tu - hw, hi = tu + hw;
    lo = std::fmod(lo + kTwoPi, kTwoPi);
    hi = std::fmod(hi + kTwoPi, kTwoPi);
    c.cut_lo.push_back(lo);
    c.cut_hi.push_back(hi);
  }
  try {
    const double center = braid_axis_point(f, cfg);
    c.markers.emplace_back(center, 0.0);
  } catch (const Error&) {
    // not in braid position; render without the center marker
  }
  return render(c, opt);
}

std::string render_front_svg(const CousinParams& p, const CurveConfig& cfg,
                             const SvgOptions& opt) {
  const auto d = front_diagram(p, cfg);
  PlanarCurve c;
  c.x.resize(opt.samples);
  c.y.resize(opt.samples);
  double xmin = 1e300, xmax = -1e300, vmin = 1e300, vmax = -1e300;
  for (int i = 0; i < opt.samples; ++i) {
    const double t = kTwoPi * i / opt.samples;
    const auto j = cousin_jet(p, t);
    c.x[i] = j.x;
    c.y[i] = j.v;
    xmin = std::min(xmin, j.x);
    xmax = std::max(xmax, j.x);
    vmin = std::min(vmin, j.v);
    vmax = std::max(vmax, j.v);
  }
  c.uniform_scale = false;  // v = f'^{2k+1} dwarfs x; stretch axes to fill
  const auto scales = fit_scales(xmax - xmin, vmax - vmin, opt, /*uniform=*/false);

  for (const auto& cr : d.crossings) {
    const auto j1 = cousin_jet(p, cr.t1);
    const auto j2 = cousin_jet(p, cr.t2);
    const auto& ju = j1.z < j2.z ? j1 : j2;
    const double tu = j1.z < j2.z ? cr.t1 : cr.t2;
    const double speed_px = std::hypot(scales.sx * ju.dx, scales.sy * ju.dv);
    const double hw = window_halfwidth(opt.gap, speed_px, opt.samples);
    c.cut_lo.push_back(std::fmod(tu - hw + kTwoPi, kTwoPi));
    c.cut_hi.push_back(std::fmod(tu + hw + kTwoPi, kTwoPi));
  }
  for (double t : d.cusps) {
    const auto j = cousin_jet(p, t);
    c.cusp_points.emplace_back(j.x, j.v);
  }
  return render(c, opt);
}

}  // namespace holobraid
