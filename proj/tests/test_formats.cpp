#include "doctest.h"

#include <string>

#include "holobraid/fourier.hpp"
#include "holobraid/svg.hpp"

using namespace holobraid;

namespace {

FourierSeries fig5() {
  FourierSeries f;
  f.sin_coeffs = {1, 4, 0, 1};
  return f;
}
FourierSeries cosine() {
  FourierSeries f;
  f.cos_coeffs = {1};
  return f;
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("projection svg breaks the under strand at each crossing") {
  const auto svg = render_projection_svg(fig5());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // 3 crossings cut the closed curve into 3 visible runs
  CHECK(count_occurrences(svg, "<path") == 3);
  // winding center marker present for a curve in braid position
  CHECK(count_occurrences(svg, "<circle") == 1);
  // dashed x axis
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("projection svg of an embedded curve is one closed path") {
  const auto svg = render_projection_svg(cosine());
  CHECK(count_occurrences(svg, "<path") == 1);
}

TEST_CASE("front svg carries cusp glyphs") {
  const auto svg = render_front_svg({1, fig5()});
  CHECK(svg.rfind("<svg", 0) == 0);
  // 4 cusp dots; 3 crossings cut the curve into 3 runs
  CHECK(count_occurrences(svg, "<circle") == 4);
  CHECK(count_occurrences(svg, "<path") == 3);
}

TEST_CASE("svg output is deterministic") {
  CHECK(render_projection_svg(fig5()) == render_projection_svg(fig5()));
  CHECK(render_front_svg({2, fig5()}) == render_front_svg({2, fig5()}));
}

TEST_CASE("fig3 projection renders without a center marker") {
  FourierSeries f;
  f.sin_coeffs = {1, 4, 0, 1, 1.5};
  const auto svg = render_projection_svg(f);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_occurrences(svg, "<circle") == 0);  // no separating point
}
