#include "holobraid/fourier.hpp"

#include <cmath>
#include <cstdlib>

#include "json.hpp"

namespace holobraid {

double FourierSeries::eval(double t) const {
  double acc = constant;
  for (std::size_t k = 0; k < sin_coeffs.size(); ++k) {
    if (sin_coeffs[k] != 0.0) acc += sin_coeffs[k] * std::sin((k + 1) * t);
  }
  for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
    if (cos_coeffs[k] != 0.0) acc += cos_coeffs[k] * std::cos((k + 1) * t);
  }
  return acc;
}

FourierSeries FourierSeries::derivative() const {
  FourierSeries d;
  const std::size_t m = std::max(sin_coeffs.size(), cos_coeffs.size());
  d.sin_coeffs.assign(m, 0.0);
  d.cos_coeffs.assign(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    const double a = k < sin_coeffs.size() ? sin_coeffs[k] : 0.0;
    const double b = k < cos_coeffs.size() ? cos_coeffs[k] : 0.0;
    // (a sin(kt) + b cos(kt))' = ak cos(kt) - bk sin(kt)
    d.cos_coeffs[k] = a * static_cast<double>(k + 1);
    d.sin_coeffs[k] = -b * static_cast<double>(k + 1);
  }
  return d;
}

int FourierSeries::degree() const {
  int deg = 0;
  for (std::size_t k = 0; k < sin_coeffs.size(); ++k) {
    if (sin_coeffs[k] != 0.0) deg = static_cast<int>(k + 1);
  }
  for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
    if (cos_coeffs[k] != 0.0) deg = std::max(deg, static_cast<int>(k + 1));
  }
  return deg;
}

bool FourierSeries::nonzero() const {
  if (constant != 0.0) return true;
  for (double a : sin_coeffs)
    if (a != 0.0) return true;
  for (double b : cos_coeffs)
    if (b != 0.0) return true;
  return false;
}

double sup_bound(const FourierSeries& f) {
  double s = std::abs(f.constant);
  for (double a : f.sin_coeffs) s += std::abs(a);
  for (double b : f.cos_coeffs) s += std::abs(b);
  return s;
}

FourierSeries parse_fourier(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("fourier input is not valid JSON: ") + e.what(),
                     1, static_cast<int>(e.byte));
  }
  if (!doc.is_object()) throw ParseError("fourier input must be a JSON object", 1, 1);
  FourierSeries f;
  for (const auto& [key, value] : doc.items()) {
    if (key == "constant") {
      if (!value.is_number()) throw ParseError("'constant' must be a number", 1, 1);
      f.constant = value.get<double>();
    } else if (key == "sin" || key == "cos") {
      if (!value.is_array()) throw ParseError("'" + key + "' must be an array", 1, 1);
      std::vector<double> coeffs;
      for (const auto& item : value) {
        if (!item.is_number()) throw ParseError("'" + key + "' entries must be numbers", 1, 1);
        coeffs.push_back(item.get<double>());
      }
      (key == "sin" ? f.sin_coeffs : f.cos_coeffs) = std::move(coeffs);
    } else {
      throw ParseError("unknown fourier field '" + key + "'", 1, 1);
    }
  }
  return f;
}

std::string serialize_fourier(const FourierSeries& f) {
  nlohmann::ordered_json doc;
  doc["constant"] = f.constant;
  doc["sin"] = f.sin_coeffs;
  doc["cos"] = f.cos_coeffs;
  return doc.dump(2) + "\n";
}

}  // namespace holobraid
