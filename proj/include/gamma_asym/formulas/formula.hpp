#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_rational.hpp"
#include "gamma_asym/means/mean_expr.hpp"

namespace gamma_asym {

/// Correction term r(x): c·ln(P(x)/Q(x)) or P(x)/Q(x), with P and Q given by
/// ascending coefficient lists in x.
struct RTerm {
  enum class Kind { log_rational, rational_fn };
  Kind kind = Kind::log_rational;
  BigRational c = 1;
  std::vector<BigRational> num;
  std::vector<BigRational> den{BigRational(1)};

  static RTerm log_of(BigRational c, std::vector<BigRational> num, std::vector<BigRational> den) {
    return {Kind::log_rational, std::move(c), std::move(num), std::move(den)};
  }
  static RTerm fraction(std::vector<BigRational> num, std::vector<BigRational> den) {
    return {Kind::rational_fn, BigRational(1), std::move(num), std::move(den)};
  }
};

/// A mean evaluated at (x + first, x + second).
template <class R>
struct ShiftedMean {
  MeanExpr<R> mean;
  R first;
  R second;

  template <class F>
  auto map(F f) const {
    using S = decltype(f(std::declval<const R&>()));
    return ShiftedMean<S>{mean.map(f), f(first), f(second)};
  }
};

template <class R>
ShiftedMean<R> arithmetic_at(R first, R second) {
  return {MeanExpr<R>::arithmetic(), std::move(first), std::move(second)};
}

enum class FormulaShape {
  separate_means,        // K = A with ε+ε* = 1; M, N symmetric with shifts summing to 1
  shared_mean,           // K = A with ε+ε* = 1; N is M
  centered_means,        // M and N both reduce to x + 1/2; K symmetric with ε+ε* = 1
  separate_means_any_k,  // as separate_means with a general symmetric K
  shared_mean_any_k,     // as shared_mean with a general symmetric K
  general,
};

inline const char* shape_name(FormulaShape s) {
  switch (s) {
    case FormulaShape::separate_means: return "separate_means";
    case FormulaShape::shared_mean: return "shared_mean";
    case FormulaShape::centered_means: return "centered_means";
    case FormulaShape::separate_means_any_k: return "separate_means_any_k";
    case FormulaShape::shared_mean_any_k: return "shared_mean_any_k";
    case FormulaShape::general: return "general";
  }
  return "?";
}

inline FormulaShape shape_from_name(const std::string& s) {
  for (auto v : {FormulaShape::separate_means, FormulaShape::shared_mean, FormulaShape::centered_means, FormulaShape::separate_means_any_k,
                 FormulaShape::shared_mean_any_k, FormulaShape::general}) {
    if (s == shape_name(v)) return v;
  }
  throw parse_error("unknown formula shape: " + s);
}

/// ln f(x) = ½ ln 2π + K(x+ε, x+ε*)·ln M(x+θ, x+θ*) - N(x+σ, x+σ*) + Σ r_i(x).
/// An empty `N` means N is M itself, evaluated at M's arguments.
template <class R>
struct Formula {
  std::string name;
  ShiftedMean<R> K;
  ShiftedMean<R> M;
  std::optional<ShiftedMean<R>> N;
  std::vector<RTerm> r;

  const ShiftedMean<R>& sub_mean() const { return N ? *N : M; }

  template <class F>
  auto map(F f) const {
    using S = decltype(f(std::declval<const R&>()));
    Formula<S> g{name, K.map(f), M.map(f), std::nullopt, r};
    if (N) g.N = N->map(f);
    return g;
  }
};

namespace detail {

template <class R>
bool shifts_sum_to_one(const ShiftedMean<R>& s) {
  return s.first + s.second == R(1);
}

// M(x+a, x+b) = x + 1/2 identically.
template <class R>
bool is_half_shift(const ShiftedMean<R>& s) {
  R half(BigRational(1, 2));
  if (s.first == half && s.second == half) return true;
  return s.mean.kind() == MeanKind::arithmetic && shifts_sum_to_one(s);
}

}  // namespace detail

/// The most specific shape the formula fits.
template <class R>
FormulaShape classify_shape(const Formula<R>& f) {
  bool k_ok = detail::shifts_sum_to_one(f.K) && f.K.mean.is_symmetric();
  bool k_arith = k_ok && f.K.mean.kind() == MeanKind::arithmetic;
  if (!k_ok) return FormulaShape::general;
  if (f.N && detail::is_half_shift(f.M) && detail::is_half_shift(*f.N)) {
    return k_arith ? FormulaShape::separate_means : FormulaShape::centered_means;
  }
  if (!f.N) return k_arith ? FormulaShape::shared_mean : FormulaShape::shared_mean_any_k;
  bool mn_ok = detail::shifts_sum_to_one(f.M) && detail::shifts_sum_to_one(*f.N) && f.M.mean.is_symmetric() &&
               f.N->mean.is_symmetric();
  if (mn_ok) return k_arith ? FormulaShape::separate_means : FormulaShape::separate_means_any_k;
  return FormulaShape::general;
}

/// Whether a formula of shape `actual` satisfies the constraints of `declared`.
inline bool shape_satisfies(FormulaShape actual, FormulaShape declared) {
  if (declared == FormulaShape::general || actual == declared) return true;
  switch (declared) {
    case FormulaShape::separate_means_any_k:
      return actual == FormulaShape::separate_means || actual == FormulaShape::centered_means;
    case FormulaShape::shared_mean_any_k: return actual == FormulaShape::shared_mean;
    default: return false;
  }
}

template <class R>
void validate_shape(const Formula<R>& f, FormulaShape declared) {
  FormulaShape actual = classify_shape(f);
  if (!shape_satisfies(actual, declared)) {
    throw domain_error("formula '" + f.name + "' does not satisfy the " + shape_name(declared) +
                       " constraints (classified as " + shape_name(actual) + ")");
  }
}

}  // namespace gamma_asym
