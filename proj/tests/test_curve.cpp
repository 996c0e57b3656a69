#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "holobraid/curve.hpp"
#include "holobraid/fourier.hpp"

using namespace holobraid;

namespace {

constexpr double kPi = std::numbers::pi;

FourierSeries cosine() {
  FourierSeries f;
  f.cos_coeffs = {1};
  return f;
}
FourierSeries fig2(double s) {  // cos t + s sin 2t
  FourierSeries f;
  f.cos_coeffs = {1};
  f.sin_coeffs = {0, s};
  return f;
}
FourierSeries fig5() {  // sin t + 4 sin 2t + sin 4t
  FourierSeries f;
  f.sin_coeffs = {1, 4, 0, 1};
  return f;
}
FourierSeries fig3() {  // fig5 + 1.5 sin 5t
  FourierSeries f;
  f.sin_coeffs = {1, 4, 0, 1, 1.5};
  return f;
}
FourierSeries three_braid() {  // cos t + sin 3t
  FourierSeries f;
  f.cos_coeffs = {1};
  f.sin_coeffs = {0, 0, 1};
  return f;
}

std::vector<FourierSeries> catalog() {
  return {cosine(), fig2(+1), fig2(-1), fig5(), three_braid()};
}

bool cyclic_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands || a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool ok = true;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.letters[(j + r) % a.size()] != b.letters[j]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("eval_jet matches the analytic unknot values") {
  const auto f = cosine();
  const auto j0 = eval_jet(f, 0.0);
  CHECK(j0.x == doctest::Approx(-1).epsilon(1e-12));
  CHECK(j0.y == doctest::Approx(0).epsilon(1e-12));
  CHECK(j0.z == doctest::Approx(1).epsilon(1e-12));
  const auto j1 = eval_jet(f, kPi / 2);
  CHECK(j1.x == doctest::Approx(0).epsilon(1e-12));
  CHECK(j1.y == doctest::Approx(-1).epsilon(1e-12));
  CHECK(j1.z == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("termwise derivatives match central differences") {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> ts(0.0, 2 * kPi);
  for (const auto& f : catalog()) {
    const auto f1 = f.derivative();
    for (int trial = 0; trial < 1000; ++trial) {
      const double t = ts(rng);
      const double h = 1e-6;
      const double fd = (f.eval(t + h) - f.eval(t - h)) / (2 * h);
      CHECK(std::abs(fd - f1.eval(t)) < 1e-7);
    }
    for (int trial = 0; trial < 200; ++trial) {
      const double t = ts(rng);
      const double h = 1e-4;  // five-point central stencil for O(h^4) accuracy
      const double y2p = eval_jet(f, t + 2 * h).y, y1p = eval_jet(f, t + h).y;
      const double y1m = eval_jet(f, t - h).y, y2m = eval_jet(f, t - 2 * h).y;
      const double dy = (-y2p + 8 * y1p - 8 * y1m + y2m) / (12 * h);
      const auto j = eval_jet(f, t);
      CHECK(std::abs(-dy - j.z) < 1e-9 * (1 + std::abs(j.z)));
    }
  }
}

TEST_CASE("zeros_on_cycle on analytic cases") {
  {
    const auto zs = zeros_on_cycle(cosine(), DerivOrder::F);
    REQUIRE(zs.size() == 2);
    CHECK(zs[0] == doctest::Approx(kPi / 2).epsilon(1e-10));
    CHECK(zs[1] == doctest::Approx(3 * kPi / 2).epsilon(1e-10));
  }
  {
    // cos t + sin 2t = cos t (1 + 2 sin t)
    const auto zs = zeros_on_cycle(fig2(+1), DerivOrder::F);
    REQUIRE(zs.size() == 4);
    CHECK(zs[0] == doctest::Approx(kPi / 2).epsilon(1e-10));
    CHECK(zs[1] == doctest::Approx(7 * kPi / 6).epsilon(1e-10));
    CHECK(zs[2] == doctest::Approx(3 * kPi / 2).epsilon(1e-10));
    CHECK(zs[3] == doctest::Approx(11 * kPi / 6).epsilon(1e-10));
  }
  {
    // f' = -sin t + 2 cos 2t: 4 sin^2 t + sin t - 2 = 0
    const auto zs = zeros_on_cycle(fig2(+1), DerivOrder::F1);
    CHECK(zs.size() == 4);
    const auto fp = fig2(+1).derivative();
    for (double t : zs) CHECK(std::abs(fp.eval(t)) < 1e-9);
  }
  {
    // 1 - cos t touches zero at t = 0 without crossing
    FourierSeries g;
    g.constant = 1;
    g.cos_coeffs = {-1};
    CHECK_THROWS_AS(zeros_on_cycle(g, DerivOrder::F), DegenerateInputError);
  }
}

TEST_CASE("double points of the paper's curves") {
  {
    const auto scan = double_points(cosine());
    CHECK(scan.points.empty());
  }
  {
    const auto scan = double_points(fig2(+1));
    REQUIRE(scan.points.size() == 1);
    const auto& dp = scan.points[0];
    CHECK(dp.t1 == doctest::Approx(7 * kPi / 6).epsilon(1e-8));
    CHECK(dp.t2 == doctest::Approx(11 * kPi / 6).epsilon(1e-8));
    CHECK(dp.upper);
    CHECK(dp.sign == -1);
    CHECK(dp.y == doctest::Approx(1.5).epsilon(1e-8));
  }
  {
    const auto scan = double_points(fig2(-1));
    REQUIRE(scan.points.size() == 1);
    CHECK_FALSE(scan.points[0].upper);
    CHECK(scan.points[0].sign == +1);
  }
  {
    const auto scan = double_points(fig5());
    REQUIRE(scan.points.size() == 3);
    for (const auto& dp : scan.points) {
      CHECK(dp.sign == +1);
      CHECK(dp.y < 0);
      // defining equations hold to the matching tolerance
      const auto f = fig5();
      const auto f1 = f.derivative();
      CHECK(std::abs(f.eval(dp.t1) - f.eval(dp.t2)) < 1e-8);
      CHECK(std::abs(f1.eval(dp.t1) - f1.eval(dp.t2)) < 1e-8);
    }
  }
}

TEST_CASE("double-point count and locations are resolution stable") {
  for (const auto& f : {fig2(+1), fig5(), three_braid()}) {
    CurveConfig coarse;
    coarse.samples = 4096;
    CurveConfig fine;
    fine.samples = 8192;
    const auto a = double_points(f, coarse).points;
    const auto b = double_points(f, fine).points;
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      CHECK(std::abs(a[j].t1 - b[j].t1) < 1e-8);
      CHECK(std::abs(a[j].t2 - b[j].t2) < 1e-8);
    }
  }
}

TEST_CASE("crossing signs computed two ways agree") {
  {
    const auto f = fig2(+1);
    const auto scan = double_points(f);
    REQUIRE(scan.points.size() == 1);
    CHECK(crossing_sign(f, scan.points[0]) == -1);
  }
  {
    const auto f = fig2(-1);
    const auto scan = double_points(f);
    REQUIRE(scan.points.size() == 1);
    CHECK(crossing_sign(f, scan.points[0]) == +1);
  }
  {
    const auto f = fig5();
    for (const auto& dp : double_points(f).points) {
      CHECK(crossing_sign(f, dp) == +1);
    }
  }
}

TEST_CASE("genericity report") {
  {
    const auto rep = genericity_report(cosine());
    CHECK(rep.all_pass());
    CHECK(rep.zeros_f == 2);
    CHECK(rep.zeros_fprime == 2);
    REQUIRE(rep.braid_index.has_value());
    CHECK(*rep.braid_index == 1);
  }
  {
    const auto rep = genericity_report(fig5());
    CHECK(rep.all_pass());
    CHECK(rep.zeros_f == 4);
    REQUIRE(rep.braid_index.has_value());
    CHECK(*rep.braid_index == 2);
    CHECK(rep.points.size() == 3);
  }
  {
    const auto rep = genericity_report(fig3());
    CHECK_FALSE(rep.zero_balance.pass);
    CHECK(rep.zeros_f == 4);
    CHECK(rep.zeros_fprime == 8);
    CHECK_FALSE(rep.braid_index.has_value());
    CHECK(rep.embedded.pass);  // the failure is condition (4), not (1)
  }
}

TEST_CASE("braid axis point") {
  {
    const double c = braid_axis_point(cosine());
    CHECK(c > -1);
    CHECK(c < 1);
  }
  CHECK_NOTHROW(braid_axis_point(fig5()));
  CHECK_THROWS_AS(braid_axis_point(fig3()), NoSeparatingPointError);
}

TEST_CASE("extract_braid reproduces the paper's words") {
  {
    const auto word = extract_braid(cosine());
    CHECK(word.strands == 1);
    CHECK(word.empty());
  }
  {
    const auto word = extract_braid(fig2(+1));
    CHECK(word.strands == 2);
    CHECK(cyclic_equal(word, BraidWord(2, {-1})));
  }
  {
    const auto word = extract_braid(fig2(-1));
    CHECK(cyclic_equal(word, BraidWord(2, {1})));
  }
  {
    const auto word = extract_braid(fig5());
    CHECK(word.strands == 2);
    CHECK(cyclic_equal(word, BraidWord(2, {1, 1, 1})));
  }
  CHECK_THROWS_AS(extract_braid(fig3()), DegenerateInputError);
}

TEST_CASE("extract_braid on a three-strand example") {
  // cos t + sin 3t: 6 zeros of f and f', four crossings, verified against an
  // independent scan of the projection.
  const auto f = three_braid();
  const auto rep = genericity_report(f);
  CHECK(rep.all_pass());
  REQUIRE(rep.braid_index.has_value());
  CHECK(*rep.braid_index == 3);
  const auto word = extract_braid(f);
  CHECK(word.strands == 3);
  CHECK(cyclic_equal(word, BraidWord(3, {-1, -2, 1, 2})));
}

TEST_CASE("writhe, half-plane and braid-index laws on the catalog") {
  for (const auto& f : catalog()) {
    const auto rep = genericity_report(f);
    REQUIRE(rep.all_pass());
    const auto word = extract_braid(f);
    int writhe = 0;
    for (const auto& dp : rep.points) {
      writhe += crossing_sign(f, dp);
      CHECK((dp.sign == -1) == (dp.y > 0));
    }
    CHECK(exponent_sum(word) == writhe);
    CHECK(word.size() == rep.points.size());
    CHECK(word.strands == rep.zeros_f / 2);
    // negative letters sit in the upper half-plane arc, positive below
    for (const auto& dp : rep.points) {
      CHECK(((dp.sign < 0) == dp.upper));
    }
  }
}

TEST_CASE("csv dump has the expected shape") {
  const auto text = curve_csv(cosine(), 16);
  CHECK(text.rfind("t,x,y,z\n", 0) == 0);
  int lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == 17);
}

TEST_CASE("fourier text format") {
  const auto f = parse_fourier(R"({"constant": 0.5, "sin": [1, 4], "cos": []})");
  CHECK(f.constant == 0.5);
  REQUIRE(f.sin_coeffs.size() == 2);
  CHECK(f.sin_coeffs[1] == 4);
  const auto round = parse_fourier(serialize_fourier(f));
  CHECK(round == f);
  CHECK_THROWS_AS(parse_fourier("not json"), ParseError);
  CHECK_THROWS_AS(parse_fourier(R"({"sin": "oops"})"), ParseError);
  CHECK_THROWS_AS(parse_fourier(R"({"bogus": []})"), ParseError);
}
