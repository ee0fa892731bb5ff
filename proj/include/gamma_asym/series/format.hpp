#pragma once

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gamma_asym/exact/big_rational.hpp"
#include "gamma_asym/exact/quad_ext.hpp"
#include "gamma_asym/series/laurent_series.hpp"
#include "gamma_asym/series/log_affine.hpp"

namespace gamma_asym {

using Json = nlohmann::ordered_json;

inline Json exact_to_json(const BigRational& q) { return q.to_string(); }
inline Json exact_to_json(const QuadExt& v) {
  if (v.is_rational()) return v.a().to_string();
  Json j;
  j["a"] = v.a().to_string();
  j["b"] = v.b().to_string();
  j["d"] = std::stoll(v.d().get_str());
  return j;
}

inline QuadExt exact_from_json(const Json& j) {
  if (j.is_string()) return QuadExt(BigRational::parse(j.get<std::string>()));
  if (j.is_number_integer()) return QuadExt(BigRational(j.get<long>()));
  if (j.is_object() && j.contains("a") && j.contains("b") && j.contains("d")) {
    BigInt d = j.at("d").is_string() ? BigInt(j.at("d").get<std::string>(), 10) : BigInt(j.at("d").get<long>());
    return QuadExt(BigRational::parse(j.at("a").get<std::string>()), BigRational::parse(j.at("b").get<std::string>()), d);
  }
  throw parse_error("exact value must be a rational string or {\"a\",\"b\",\"d\"}, got " + j.dump());
}

namespace detail {

inline std::string power_suffix(int k) {
  if (k == 0) return "";
  if (k == 1) return "·t";
  return "·t^" + std::to_string(k);
}

// Splits a coefficient into a sign and a magnitude string for joining; surds
// with a rational part keep their own parentheses.
inline std::pair<bool, std::string> signed_text(const BigRational& q) {
  return {q.sign() < 0, q.abs().to_string()};
}
inline std::pair<bool, std::string> signed_text(const QuadExt& v) {
  if (v.is_rational()) return signed_text(v.a());
  return {false, v.to_string()};
}

}  // namespace detail

/// "c0 + c1·t - c3·t^3 + O(t^n)".
template <class R>
std::string to_string(const LaurentSeries<R>& s) {
  std::ostringstream os;
  bool first = true;
  if (!s.is_zero()) {
    for (int k = s.valuation(); k < s.order(); ++k) {
      R c = s.coeff(k);
      if (c.is_zero()) continue;
      auto [neg, text] = detail::signed_text(c);
      std::string term = text + detail::power_suffix(k);
      if (text == "1" && k != 0) term = detail::power_suffix(k).substr(std::string("·").size());
      if (first) {
        os << (neg ? "-" : "") << term;
      } else {
        os << (neg ? " - " : " + ") << term;
      }
      first = false;
    }
  }
  if (first) os << "0";
  os << " + O(t^" << s.order() << ")";
  return os.str();
}

template <class R>
Json to_json(const LaurentSeries<R>& s) {
  Json terms = Json::array();
  if (!s.is_zero()) {
    for (int k = s.valuation(); k < s.order(); ++k) {
      R c = s.coeff(k);
      if (c.is_zero()) continue;
      terms.push_back(Json::array({k, exact_to_json(c)}));
    }
  }
  Json j;
  j["order"] = s.order();
  j["terms"] = terms;
  return j;
}

inline LaurentSeries<QuadExt> series_from_json(const Json& j) {
  LaurentSeries<QuadExt> s(j.at("order").get<int>());
  for (const auto& term : j.at("terms")) s.set(term.at(0).get<int>(), exact_from_json(term.at(1)));
  return s;
}

template <class R>
Json to_json(const LogAffine<R>& f) {
  Json j;
  j["a"] = to_json(f.a());
  j["b"] = to_json(f.b());
  return j;
}

}  // namespace gamma_asym
