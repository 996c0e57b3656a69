#pragma once

#include <span>
#include <vector>

#include "holobraid/curve.hpp"
#include "holobraid/fourier.hpp"

namespace holobraid {

// Selects a member of the L_k family over the base function f:
//   L_k(t) = (-f, f'^{2k+1}, -(2k+1) f'^{2k-1} f'').
// k = 0 denotes the holonomic curve itself (-f, f', -f''), which is tangent
// to beta rather than alpha and whose xv projection is not a front.
struct CousinParams {
  int k = 1;
  FourierSeries base;
};

struct CousinJet {
  double x = 0, v = 0, z = 0;
  double dx = 0, dv = 0, dz = 0;
};

CousinJet cousin_jet(const CousinParams& p, double t);

// A sampled curve point for tangency checks: w plays the role of v for the
// contact form alpha = z dx - dv and of y for beta = z dx - y dy.
struct TangentSample {
  double x = 0, w = 0, z = 0;
  double dx = 0, dw = 0;
};

enum class ContactForm { Alpha, Beta };

// Maximum over samples of the form residual, relative to the sample's
// derivative magnitude.  Beta requires |w| > y_floor everywhere (the
// structure degenerates on the plane y = 0).
double tangency_residual(std::span<const TangentSample> samples, ContactForm form,
                         double y_floor = 1e-9);

std::vector<TangentSample> sample_cousin(const CousinParams& p, int samples);
// Holonomic curve sampled with w = y, dw = dy (for beta).
std::vector<TangentSample> sample_holonomic(const FourierSeries& f, int samples);

struct FrontCrossing {
  double t1 = 0, t2 = 0;  // parameter pair, equal to the holonomic one
  double x = 0, v = 0;    // position in the front plane
  int sign = 0;
};

struct FrontDiagram {
  std::vector<FrontCrossing> crossings;
  std::vector<double> cusps;  // parameters where f' = 0
};

// The front projection data of L_k (k >= 1): crossings at exactly the
// holonomic double-point parameter pairs, cusps where the holonomic
// projection meets the x axis.
FrontDiagram front_diagram(const CousinParams& p, const CurveConfig& cfg = {});

// One branch through a front double point: its slope z (= dv/dx) and the
// direction data of the traversal.
struct FrontBranch {
  double z = 0;
  double dx = 0;
  double dv = 0;
};

// Front-projection sign rule: positive when the two branches cross a
// vertical line through the double point from opposite directions, negative
// from the same direction.  Cross-checked against the over/under frame from
// the z values; throws DegenerateInputError on tangent branches, vertical
// tangencies, or disagreement between the two routes.
int front_crossing_sign(const FrontBranch& b1, const FrontBranch& b2,
                        double slope_tol = 1e-6);

struct Point3 {
  double x = 0, y = 0, z = 0;
};

// The half-space coordinate change y -> y^2/2 taking beta-tangent curves to
// alpha-tangent curves; even in y, so both half-spaces land in v > 0.
Point3 half_space_map(const Point3& p);

// The explicit Legendrian isotopy between L_k and L_m.  The corrected form
// (default) is alpha-tangent for every s, with s=1 giving L_k and s=0 L_m;
// `verbatim` evaluates the published formula, whose second z-coefficient
// stays (2k+1) and which is therefore not tangent away from the endpoints.
CousinJet dasbach_isotopy_jet(const FourierSeries& f, int k, int m, double s, double t,
                              bool verbatim = false);

std::vector<TangentSample> sample_dasbach(const FourierSeries& f, int k, int m, double s,
                                          int samples, bool verbatim = false);

}  // namespace holobraid
