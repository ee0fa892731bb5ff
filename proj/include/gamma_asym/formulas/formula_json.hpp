#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/formulas/formula.hpp"
#include "gamma_asym/means/mean_expr.hpp"
#include "gamma_asym/series/format.hpp"

namespace gamma_asym {

/// Element codec used by the JSON readers; "*" in a coefficient vector is
/// resolved by the reader, never passed to `parse`.
template <class R>
struct JsonCodec {
  std::function<R(const Json&)> parse;
  std::function<Json(const R&)> dump;
};

inline JsonCodec<QuadExt> exact_codec() {
  return {[](const Json& j) { return exact_from_json(j); }, [](const QuadExt& v) { return exact_to_json(v); }};
}

namespace detail {

inline bool is_star(const Json& j) { return j.is_string() && j.get<std::string>() == "*"; }

// Parses a coefficient vector; a single "*" entry becomes total - Σ others.
template <class R>
std::vector<R> parse_coefficients(const Json& arr, const R& total, const JsonCodec<R>& codec) {
  if (!arr.is_array()) throw parse_error("coefficient list must be an array, got " + arr.dump());
  std::vector<R> out(arr.size(), R(0));
  int star = -1;
  R rest = total;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (is_star(arr[i])) {
      if (star >= 0) throw parse_error("at most one \"*\" entry per coefficient list");
      star = static_cast<int>(i);
      continue;
    }
    out[i] = codec.parse(arr[i]);
    rest = rest - out[i];
  }
  if (star >= 0) out[static_cast<std::size_t>(star)] = rest;
  return out;
}

template <class R>
Json dump_coefficients(const std::vector<R>& v, const JsonCodec<R>& codec) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(codec.dump(x));
  return arr;
}

inline std::vector<BigRational> parse_rationals(const Json& arr) {
  std::vector<BigRational> out;
  for (const auto& x : arr) {
    out.push_back(x.is_string() ? BigRational::parse(x.get<std::string>()) : BigRational(x.get<long>()));
  }
  return out;
}

inline Json dump_rationals(const std::vector<BigRational>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(x.to_string());
  return arr;
}

}  // namespace detail

template <class R>
MeanExpr<R> mean_from_json(const Json& j, const JsonCodec<R>& codec) {
  if (j.is_string()) return mean_from_json(Json{{"kind", j}}, codec);
  MeanKind kind = kind_from_name(j.at("kind").get<std::string>());
  switch (kind) {
    case MeanKind::arithmetic: return MeanExpr<R>::arithmetic();
    case MeanKind::geometric: return MeanExpr<R>::geometric();
    case MeanKind::identric: return MeanExpr<R>::identric();
    case MeanKind::logarithmic: return MeanExpr<R>::logarithmic();
    case MeanKind::power_product: {
      std::vector<MeanExpr<R>> factors;
      for (const auto& f : j.at("factors")) factors.push_back(mean_from_json(f, codec));
      return MeanExpr<R>::power_product(std::move(factors), detail::parse_rationals(j.at("weights")));
    }
    case MeanKind::rational:
      return MeanExpr<R>::rational(detail::parse_coefficients(j.at("p"), R(1), codec),
                                   detail::parse_coefficients(j.at("q"), R(1), codec));
    case MeanKind::symmetric_rational: {
      R half(BigRational(1, 2));
      int n = j.at("n").get<int>();
      return MeanExpr<R>::symmetric(n, detail::parse_coefficients(j.at("p"), half, codec),
                                    detail::parse_coefficients(j.at("q"), half, codec));
    }
  }
  throw parse_error("unsupported mean kind");
}

template <class R>
Json mean_to_json(const MeanExpr<R>& m, const JsonCodec<R>& codec) {
  Json j;
  j["kind"] = kind_name(m.kind());
  switch (m.kind()) {
    case MeanKind::power_product: {
      Json fs = Json::array();
      for (const auto& f : m.factors()) fs.push_back(mean_to_json(f, codec));
      j["factors"] = fs;
      j["weights"] = detail::dump_rationals(m.weights());
      break;
    }
    case MeanKind::rational:
      j["p"] = detail::dump_coefficients(m.p(), codec);
      j["q"] = detail::dump_coefficients(m.q(), codec);
      break;
    case MeanKind::symmetric_rational:
      j["n"] = m.degree();
      j["p"] = detail::dump_coefficients(m.p_half(), codec);
      j["q"] = detail::dump_coefficients(m.q_half(), codec);
      break;
    default: break;
  }
  return j;
}

inline Json rterm_to_json(const RTerm& r) {
  Json j;
  j["kind"] = r.kind == RTerm::Kind::log_rational ? "log_rational" : "rational_fn";
  j["c"] = r.c.to_string();
  j["num"] = detail::dump_rationals(r.num);
  j["den"] = detail::dump_rationals(r.den);
  return j;
}

inline RTerm rterm_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  RTerm r;
  if (kind == "log_rational") {
    r.kind = RTerm::Kind::log_rational;
  } else if (kind == "rational_fn") {
    r.kind = RTerm::Kind::rational_fn;
  } else {
    throw parse_error("unknown correction term kind: " + kind);
  }
  if (j.contains("c")) r.c = BigRational::parse(j.at("c").get<std::string>());
  r.num = detail::parse_rationals(j.at("num"));
  if (j.contains("den")) r.den = detail::parse_rationals(j.at("den"));
  return r;
}

template <class R>
ShiftedMean<R> shifted_from_json(const Json& j, const JsonCodec<R>& codec) {
  const Json& s = j.at("shifts");
  if (!s.is_array() || s.size() != 2) throw parse_error("\"shifts\" must be a pair");
  return {mean_from_json(j.at("mean"), codec), codec.parse(s[0]), codec.parse(s[1])};
}

template <class R>
Json shifted_to_json(const ShiftedMean<R>& s, const JsonCodec<R>& codec) {
  Json j;
  j["mean"] = mean_to_json(s.mean, codec);
  j["shifts"] = Json::array({codec.dump(s.first), codec.dump(s.second)});
  return j;
}

/// Reads {"name", "shape"?, "K", "M", "N" | "same_as_M", "r"?}. A declared
/// shape is validated.
template <class R>
Formula<R> formula_from_json(const Json& j, const JsonCodec<R>& codec) {
  Formula<R> f{j.value("name", std::string("custom")), shifted_from_json(j.at("K"), codec),
               shifted_from_json(j.at("M"), codec), std::nullopt, {}};
  const Json& n = j.at("N");
  if (!(n.is_string() && n.get<std::string>() == "same_as_M")) f.N = shifted_from_json(n, codec);
  if (j.contains("r")) {
    for (const auto& t : j.at("r")) f.r.push_back(rterm_from_json(t));
  }
  if (j.contains("shape")) validate_shape(f, shape_from_name(j.at("shape").get<std::string>()));
  return f;
}

template <class R>
Json formula_to_json(const Formula<R>& f, const JsonCodec<R>& codec) {
  Json j;
  j["name"] = f.name;
  j["shape"] = shape_name(classify_shape(f));
  j["K"] = shifted_to_json(f.K, codec);
  j["M"] = shifted_to_json(f.M, codec);
  j["N"] = f.N ? shifted_to_json(*f.N, codec) : Json("same_as_M");
  Json r = Json::array();
  for (const auto& t : f.r) r.push_back(rterm_to_json(t));
  j["r"] = r;
  return j;
}

inline Formula<QuadExt> formula_from_json(const Json& j) { return formula_from_json(j, exact_codec()); }
inline Json formula_to_json(const Formula<QuadExt>& f) { return formula_to_json(f, exact_codec()); }

}  // namespace gamma_asym
