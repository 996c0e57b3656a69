#pragma once

#include <string>
#include <vector>

#include "holobraid/errors.hpp"

namespace holobraid {

// A truncated trigonometric series with period 2*pi:
//   f(t) = constant + sum_k sin_coeffs[k-1] sin(kt) + cos_coeffs[k-1] cos(kt)
struct FourierSeries {
  double constant = 0.0;
  std::vector<double> sin_coeffs;
  std::vector<double> cos_coeffs;

  double eval(double t) const;
  // Termwise differentiation (exact).
  FourierSeries derivative() const;
  int degree() const;
  bool nonzero() const;

  bool operator==(const FourierSeries&) const = default;
};

// An upper bound on sup |f| from the coefficient magnitudes.
double sup_bound(const FourierSeries& f);

// JSON document with fields `constant` (number, optional) and `sin`, `cos`
// (arrays of numbers, optional), e.g. {"sin": [1, 4, 0, 1]}.
FourierSeries parse_fourier(const std::string& text);
std::string serialize_fourier(const FourierSeries& f);

}  // namespace holobraid
