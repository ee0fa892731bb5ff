#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/fit/symbolic_poly.hpp"
#include "gamma_asym/formulas/formula.hpp"
#include "gamma_asym/formulas/formula_json.hpp"

namespace gamma_asym {

inline constexpr int kMaxFitOrder = 13;

/// A formula whose mean coefficients may contain unknowns, with the order
/// through which the fit tries to cancel the residual.
struct FitTemplate {
  Formula<SymbolicPoly> formula;
  std::vector<std::string> unknowns;
  int order = 12;

  int index_of(const std::string& name) const {
    auto it = std::find(unknowns.begin(), unknowns.end(), name);
    return it == unknowns.end() ? -1 : static_cast<int>(it - unknowns.begin());
  }
};

namespace detail {

inline SymbolicPoly symbolic_from_json(const Json& j, const std::vector<std::string>& unknowns) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto it = std::find(unknowns.begin(), unknowns.end(), s);
    if (it != unknowns.end()) return SymbolicPoly::variable(static_cast<int>(it - unknowns.begin()));
    try {
      return SymbolicPoly(BigRational::parse(s));
    } catch (const parse_error&) {
      throw parse_error("'" + s + "' is neither a declared unknown nor a rational");
    }
  }
  if (!(j.is_object() && j.contains("terms"))) return SymbolicPoly(exact_from_json(j));
  SymbolicPoly acc;
  for (const auto& term : j.at("terms")) {
    SymbolicPoly mono(exact_from_json(term.at("coeff")));
    const Json powers = term.value("powers", Json::object());
    for (const auto& [name, power] : powers.items()) {
      auto it = std::find(unknowns.begin(), unknowns.end(), name);
      if (it == unknowns.end()) throw parse_error("'" + name + "' is not a declared unknown");
      int e = power.get<int>();
      if (e < 0 || e > 255) throw parse_error("power of '" + name + "' out of range");
      for (int k = 0; k < e; ++k) mono *= SymbolicPoly::variable(static_cast<int>(it - unknowns.begin()));
    }
    acc += mono;
  }
  return acc;
}

// A constant as an exact value, a bare unknown by name, anything else as
// {"terms": [{"coeff", "powers": {name: e}}]}.
inline Json symbolic_to_json(const SymbolicPoly& p, const std::vector<std::string>& unknowns) {
  if (p.is_constant()) return exact_to_json(p.constant_term());
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    if (p == SymbolicPoly::variable(static_cast<int>(i))) return unknowns[i];
  }
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json powers = Json::object();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) powers[i < unknowns.size() ? unknowns[i] : "u" + std::to_string(i)] = m[i];
    }
    terms.push_back(Json{{"coeff", exact_to_json(c)}, {"powers", powers}});
  }
  return Json{{"terms", terms}};
}

}  // namespace detail

inline JsonCodec<SymbolicPoly> symbolic_codec(const std::vector<std::string>& unknowns) {
  auto parse = [unknowns](const Json& j) { return detail::symbolic_from_json(j, unknowns); };
  auto dump = [unknowns](const SymbolicPoly& p) { return detail::symbolic_to_json(p, unknowns); };
  return {parse, dump};
}

inline void check_template_limits(const FitTemplate& t) {
  if (t.unknowns.size() > static_cast<std::size_t>(kMaxUnknowns)) {
    throw fit_error("fit templates are limited to " + std::to_string(kMaxUnknowns) + " unknowns");
  }
  if (t.order < 1 || t.order > kMaxFitOrder) {
    throw fit_error("fit order must lie in [1, " + std::to_string(kMaxFitOrder) + "]");
  }
}

/// {"name", "unknowns": [...], "order"?, "shape"?, "K", "M", "N", "r"?} where
/// coefficient entries are rationals, unknown names or {"terms": [...]}
/// polynomials, and one entry per vector may be "*".
inline FitTemplate template_from_json(const Json& j) {
  FitTemplate t;
  if (j.contains("unknowns")) t.unknowns = j.at("unknowns").get<std::vector<std::string>>();
  t.order = j.value("order", 12);
  check_template_limits(t);
  t.formula = formula_from_json(j, symbolic_codec(t.unknowns));
  return t;
}

inline Json template_to_json(const FitTemplate& t) {
  Json j = formula_to_json(t.formula, symbolic_codec(t.unknowns));
  j["unknowns"] = t.unknowns;
  j["order"] = t.order;
  return j;
}

/// The three template families of the open problems for a fixed n:
/// 1: (x+1/2)·ln S^{n,n-1}(x, x+1) - (x+1/2)
/// 2: (x+1/2)·ln(x+1/2) - S^{n,n-1}(x, x+1)
/// 3: (x+1/2)·ln H^{n,n-1}(x, x+1) - H^{n,n-1}(x, x+1)
inline FitTemplate open_problem_template(int problem, int n, int order = 12) {
  if (n < 2) throw domain_error("open problem templates need n >= 2");
  FitTemplate t;
  t.order = order;
  auto unknown = [&](const std::string& name) {
    t.unknowns.push_back(name);
    return SymbolicPoly::variable(static_cast<int>(t.unknowns.size()) - 1);
  };
  // Each vector gets unknowns except one entry eliminated by normalization.
  auto vec = [&](const std::string& prefix, int len, int star, const SymbolicPoly& total) {
    std::vector<SymbolicPoly> v;
    SymbolicPoly rest = total;
    for (int i = 0; i < len; ++i) {
      if (i == star) {
        v.emplace_back();
        continue;
      }
      v.push_back(unknown(prefix + std::to_string(i)));
      rest -= v.back();
    }
    v[static_cast<std::size_t>(star)] = rest;
    return v;
  };
  SymbolicPoly half(BigRational(1, 2)), one(1);
  auto a01 = arithmetic_at<SymbolicPoly>(SymbolicPoly(0), SymbolicPoly(1));
  MeanExpr<SymbolicPoly> mean = MeanExpr<SymbolicPoly>::arithmetic();
  if (problem == 1 || problem == 2) {
    int lp = n / 2 + 1, lq = (n - 1) / 2 + 1;
    auto p = vec("p", lp, lp - 1, half);
    auto q = vec("q", lq, lq - 1, half);
    mean = MeanExpr<SymbolicPoly>::symmetric(n, p, q);
  } else if (problem == 3) {
    auto p = vec("p", n + 1, n / 2, one);
    auto q = vec("q", n, n - 1, one);
    mean = MeanExpr<SymbolicPoly>::rational(p, q);
  } else {
    throw domain_error("open problems are numbered 1 to 3");
  }
  ShiftedMean<SymbolicPoly> s{mean, SymbolicPoly(0), SymbolicPoly(1)};
  std::string name = "open_problem" + std::to_string(problem) + "_n" + std::to_string(n);
  if (problem == 1) t.formula = {name, a01, s, a01, {}};
  if (problem == 2) t.formula = {name, a01, a01, s, {}};
  if (problem == 3) t.formula = {name, a01, s, std::nullopt, {}};
  check_template_limits(t);
  return t;
}

}  // namespace gamma_asym
