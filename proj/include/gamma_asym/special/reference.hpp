#pragma once

#include <algorithm>
#include <utility>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/special/bernoulli.hpp"

namespace gamma_asym {

/// Highest polygamma order the evaluators accept.
inline constexpr int kMaxPolygammaOrder = 8;

namespace detail {

inline long stirling_shift_target(int precision) { return std::max(precision / 4, 40); }

inline bool is_nonpositive_integer(const BigFloat& x) { return x.is_integer() && x.sign() <= 0; }

// Runs `attempt(wp)` -> {value, largest intermediate magnitude} with growing
// guard bits until the cancellation it reports leaves `precision` bits intact.
template <class F>
BigFloat with_cancellation_guard(int precision, F attempt) {
  int guard = 32;
  for (int tries = 0; tries < 12; ++tries) {
    auto [value, big] = attempt(precision + guard);
    if (value.is_zero() || big.is_zero()) return value.with_precision(precision);
    long lost = big.exponent() - value.exponent();
    if (lost + 8 < guard) return value.with_precision(precision);
    guard = static_cast<int>(std::min<long>(lost + 48, 1L << 20));
  }
  throw domain_error("cancellation did not resolve (argument too close to a zero of the function)");
}

}  // namespace detail

/// ln Γ(x+1) for x > -1, by upward shift to x+m >= max(precision/4, 40) and
/// the Stirling series, truncated once terms fall below the working ulp.
inline BigFloat lngamma_num(const BigFloat& x, int precision) {
  if (!(x > -1L)) throw domain_error("lngamma_num: requires x > -1 (pole or outside domain)");
  if (x == 0L || x == 1L) return BigFloat(precision);
  return detail::with_cancellation_guard(precision, [&](int wp) {
    BigFloat z = x.with_precision(wp) + 1L;
    BigFloat prod(1L, wp);
    long target = detail::stirling_shift_target(wp);
    while (z < target) {
      prod *= z;
      z += 1L;
    }
    BigFloat half = BigFloat(1L, wp) / 2L;
    BigFloat main = (z - half) * log(z) - z + half_log_two_pi(wp);
    BigFloat zinv = BigFloat(1L, wp) / z;
    BigFloat zinv2 = zinv * zinv;
    BigFloat p = zinv;
    BigFloat tail(wp);
    BigFloat eps = abs(main) * BigFloat::two_pow(-wp, wp);
    for (int k = 1; k < 4 * wp; ++k) {
      BigFloat term = BigFloat(bernoulli(2 * k) / BigRational(2L * k * (2L * k - 1)), wp) * p;
      tail += term;
      if (abs(term) < eps) break;
      p *= zinv2;
    }
    BigFloat lp = log(prod);
    BigFloat value = main + tail - lp;
    return std::pair{value, max(abs(main), abs(lp))};
  });
}

/// ψ^(n)(x) for 0 <= n <= 8; ψ^(0) = ψ. Poles at nonpositive integers.
inline BigFloat polygamma_num(int n, const BigFloat& x, int precision) {
  if (n < 0 || n > kMaxPolygammaOrder) throw domain_error("polygamma_num: order must be in [0, 8]");
  if (detail::is_nonpositive_integer(x)) throw domain_error("polygamma_num: pole at nonpositive integer");
  return detail::with_cancellation_guard(precision, [&](int wp) {
    BigFloat z = x.with_precision(wp);
    // shift part: ψ^(n)(x) = ψ^(n)(x+m) - (-1)^n n! Σ_{j<m} (x+j)^-(n+1)
    BigFloat shift(wp);
    long target = detail::stirling_shift_target(wp) + n;
    while (z < target) {
      shift += pow(z, static_cast<long>(-(n + 1)));
      z += 1L;
    }
    BigFloat nfact(factorial(static_cast<unsigned long>(n)), wp);
    shift *= nfact;
    if (n % 2 == 1) shift = -shift;  // shift now (-1)^n n! Σ ...

    BigFloat zinv = BigFloat(1L, wp) / z;
    BigFloat asym(wp);
    BigFloat lead(wp);
    if (n == 0) {
      lead = log(z) - zinv / 2L;
      BigFloat eps = abs(lead) * BigFloat::two_pow(-wp, wp);
      BigFloat zinv2 = zinv * zinv;
      BigFloat p = zinv2;
      for (int k = 1; k < 4 * wp; ++k) {
        BigFloat term = BigFloat(bernoulli(2 * k) / BigRational(2L * k), wp) * p;
        asym -= term;
        if (abs(term) < eps) break;
        p *= zinv2;
      }
    } else {
      // (-1)^(n+1) [ (n-1)!/z^n + n!/(2 z^(n+1)) + Σ B_2k (2k+n-1)!/((2k)! z^(2k+n)) ]
      BigFloat zn = pow(zinv, static_cast<long>(n));
      lead = BigFloat(factorial(static_cast<unsigned long>(n - 1)), wp) * zn + nfact * zn * zinv / 2L;
      BigFloat eps = abs(lead) * BigFloat::two_pow(-wp, wp);
      BigFloat zinv2 = zinv * zinv;
      BigFloat p = zn * zinv2;
      for (int k = 1; k < 4 * wp; ++k) {
        BigRational c = bernoulli(2 * k) * BigRational(factorial(static_cast<unsigned long>(2 * k + n - 1)),
                                                       factorial(static_cast<unsigned long>(2 * k)));
        BigFloat term = BigFloat(c, wp) * p;
        asym += term;
        if (abs(term) < eps) break;
        p *= zinv2;
      }
      if (n % 2 == 0) {
        lead = -lead;
        asym = -asym;
      }
    }
    BigFloat at_z = lead + asym;
    BigFloat value = at_z - shift;
    return std::pair{value, max(abs(at_z), abs(shift))};
  });
}

inline BigFloat psi_num(const BigFloat& x, int precision) { return polygamma_num(0, x, precision); }

struct BoundPair {
  BigFloat low;
  BigFloat high;
};

/// (k-1)!/x^k + k!/(2x^(k+1)) and (k-1)!/x^k + k!/x^(k+1), the two sides of
/// the double inequality bracketing (-1)^(k+1) ψ^(k)(x) on x > 0.
inline BoundPair guo_qi_bounds(int k, const BigFloat& x) {
  if (k < 1) throw domain_error("guo_qi_bounds: k must be >= 1");
  if (!(x > 0L)) throw domain_error("guo_qi_bounds: x must be positive");
  int prec = x.precision();
  BigFloat base = BigFloat(factorial(static_cast<unsigned long>(k - 1)), prec) / pow(x, static_cast<long>(k));
  BigFloat step = BigFloat(factorial(static_cast<unsigned long>(k)), prec) / pow(x, static_cast<long>(k + 1));
  return {base + step / 2L, base + step};
}

}  // namespace gamma_asym
