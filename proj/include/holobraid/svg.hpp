#pragma once

#include <string>

#include "holobraid/curve.hpp"
#include "holobraid/legendrian.hpp"

namespace holobraid {

struct SvgOptions {
  int samples = 2048;    // polyline resolution
  double width = 640;    // viewport width in px (height follows the aspect)
  double margin = 30;    // px
  double stroke = 1.6;   // px
  double gap = 10;       // px of under-strand gap at each crossing
};

// The xy projection of the holonomic curve, with the under strand (smaller
// z = -f'') broken at each crossing, the x axis dashed, and the winding
// center marked when a separating point exists.
std::string render_projection_svg(const FourierSeries& f, const CurveConfig& cfg = {},
                                  const SvgOptions& opt = {});

// The xv front projection of L_k with cusp glyphs; the under strand (smaller
// z) is broken at each crossing.
std::string render_front_svg(const CousinParams& p, const CurveConfig& cfg = {},
                             const SvgOptions& opt = {});

}  // namespace holobraid
