#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtop/cyclotomic.hpp"
#include "qtop/matrix.hpp"
#include "qtop/quantum_algebra.hpp"
#include "qtop/rational.hpp"

namespace qtop {

// nlohmann::ordered_json keeps insertion order, so output is byte-stable.
using Json = nlohmann::ordered_json;

inline Json to_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

/// {"order": N, "coeffs": ["p/q", ...], "approx": [re, im]}
inline Json to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
  Json j;
  j["order"] = x.order();
  j["coeffs"] = std::move(coeffs);
  j["approx"] = to_json(x.approx());
  return j;
}

inline CycNum cycnum_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
  return CycNum::from_coeffs(j.at("order").get<int>(), coeffs);
}

template <class T>
Json matrix_to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const Signature& s) {
  Json out = Json::array();
  for (const auto& p : s) out.push_back(Json{{"color", p.color}, {"dual", p.dual}});
  return out;
}

template <class F>
Json operator_to_json(const Operator<F>& op) {
  Json j;
  j["domain"] = to_json(op.domain);
  j["codomain"] = to_json(op.codomain);
  j["matrix"] = matrix_to_json(op.matrix);
  return j;
}

}  // namespace qtop
