#pragma once

// Deterministic generators for the property tests. Every test seeds its own
// engine so failures reproduce without shared state.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gamma_asym.hpp"

namespace gen {

using Engine = std::mt19937_64;

inline Engine engine(std::uint64_t seed) { return Engine(seed); }

inline long integer(Engine& e, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(e); }

inline gamma_asym::BigRational rational(Engine& e, long max_num = 50, long max_den = 50) {
  return gamma_asym::BigRational(integer(e, -max_num, max_num), integer(e, 1, max_den));
}

inline gamma_asym::BigRational nonzero_rational(Engine& e, long max_num = 50, long max_den = 50) {
  for (;;) {
    auto q = rational(e, max_num, max_den);
    if (!q.is_zero()) return q;
  }
}

inline gamma_asym::QuadExt surd(Engine& e, long d = 3) {
  return gamma_asym::QuadExt(rational(e), rational(e), gamma_asym::BigInt(d));
}

/// Positive float in [lo, hi], log-uniform.
inline gamma_asym::BigFloat positive(Engine& e, double lo, double hi, int precision) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return gamma_asym::BigFloat(std::exp(u(e)), precision);
}

/// Series with valuation >= `low` and small rational coefficients.
inline gamma_asym::LaurentSeries<gamma_asym::BigRational> series(Engine& e, int low, int order) {
  std::vector<gamma_asym::BigRational> c;
  for (int k = low; k < order; ++k) c.push_back(rational(e, 9, 9));
  return gamma_asym::LaurentSeries<gamma_asym::BigRational>::from_coefficients(low, c, order);
}

}  // namespace gen
