#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holobraid/braid.hpp"
#include "holobraid/fourier.hpp"

namespace holobraid {

// Tolerances and grid sizes of the numerical engine.  The defaults leave at
// least four orders of magnitude of slack for double precision on series of
// modest degree.
struct CurveConfig {
  int samples = 4096;        // grid points per cycle
  double root_tol = 1e-10;   // parameter tolerance of root refinement
  double match_tol = 1e-8;   // double-point matching residual
  double dedupe_tol = 1e-6;  // dedupe radius for roots and double points
  double axis_tol = 1e-6;    // |f'| threshold of condition (2)
  double cluster_tol = 1e-6; // parameter clustering for triple points
  int newton_max_iter = 60;
  int max_refine_retries = 6;
};

// The 3-jet sample (-f, f', -f'') with its t-derivative.
struct Jet3 {
  double x = 0, y = 0, z = 0;
  double dx = 0, dy = 0, dz = 0;
};
Jet3 eval_jet(const FourierSeries& f, double t);

enum class DerivOrder { F = 0, F1 = 1, F2 = 2 };

// All roots of the selected derivative in [0, 2*pi): sign-change bracketing
// on the dense grid, then bisection/Newton refinement.  Non-simple (tangent)
// zeros raise DegenerateInputError.
std::vector<double> zeros_on_cycle(const FourierSeries& f, DerivOrder which,
                                   const CurveConfig& cfg = {});

struct DoublePoint {
  double t1 = 0, t2 = 0;  // t1 < t2 in [0, 2*pi)
  double x = 0, y = 0;    // the planar point
  int sign = 0;           // half-plane rule: -1 above the axis, +1 below
  bool upper = false;     // y > 0
};

struct DoublePointScan {
  std::vector<DoublePoint> points;  // sorted by (t1, t2)
  std::vector<std::string> diagnostics;
};

// Solves f(t1) = f(t2), f'(t1) = f'(t2) over the off-diagonal torus by a
// grid scan with 2D Newton refinement; symmetric pairs are reported once.
DoublePointScan double_points(const FourierSeries& f, const CurveConfig& cfg = {});

// Crossing sign computed two ways (half-plane rule and the over/under frame
// from z = -f'') which must agree; throws DegenerateInputError on an axis
// double point or method disagreement.
int crossing_sign(const FourierSeries& f, const DoublePoint& dp,
                  const CurveConfig& cfg = {});

struct ConditionResult {
  bool pass = true;
  std::string detail;
};

struct GenericityReport {
  ConditionResult embedded;      // (1) no double point with matching z
  ConditionResult off_axis;      // (2) no double point on the x axis
  ConditionResult no_triple;     // (3) no triple point
  ConditionResult zero_balance;  // (4) zero counts of f and f' agree
  int zeros_f = 0;
  int zeros_fprime = 0;
  std::optional<int> braid_index;  // zeros_f / 2, present iff (4) passes
  std::vector<DoublePoint> points;
  std::vector<std::string> diagnostics;

  bool all_pass() const {
    return embedded.pass && off_axis.pass && no_triple.pass && zero_balance.pass;
  }
};

// Failures are report entries, never exceptions.
GenericityReport genericity_report(const FourierSeries& f, const CurveConfig& cfg = {});

// The winding center: a point on the x axis separating the axis crossings
// with f'' > 0 from those with f'' < 0.  Throws NoSeparatingPointError when
// the two groups interleave.
double braid_axis_point(const FourierSeries& f, const CurveConfig& cfg = {});

// Reads the closed-braid word off the projection: polar angle about the
// separating point is strictly increasing, strands are ordered by radius
// (innermost = 1), each double point emits sigma_i^{+-1}.
BraidWord extract_braid(const FourierSeries& f, const CurveConfig& cfg = {});

// CSV dump "t,x,y,z" of the 3-jet at `samples` points.
std::string curve_csv(const FourierSeries& f, int samples = 1024);

}  // namespace holobraid
