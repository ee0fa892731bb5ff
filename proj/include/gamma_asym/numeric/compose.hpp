#pragma once

#include <functional>
#include <vector>

#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/numeric/jet.hpp"
#include "gamma_asym/special/reference.hpp"

namespace gamma_asym {

/// f(a) for a jet a, given the Taylor coefficients f^(k)(a0)/k! of f at the
/// value a0 (k = 0..degree).
inline Jet compose(const Jet& a, const std::vector<BigFloat>& taylor) {
  Jet delta = a - a.value();
  Jet power = a.lift(BigFloat(1L, a.precision()));
  Jet sum = a.lift(taylor[0]);
  for (int k = 1; k <= a.degree(); ++k) {
    power = power * delta;
    sum += power * taylor[static_cast<std::size_t>(k)];
  }
  return sum;
}

/// ln Γ(x+1), overloaded for plain values and jets.
inline BigFloat lngamma1(const BigFloat& x) { return lngamma_num(x, x.precision()); }
inline Jet lngamma1(const Jet& x) {
  int prec = x.precision();
  const BigFloat& x0 = x.value();
  std::vector<BigFloat> taylor;
  taylor.push_back(lngamma_num(x0, prec));
  BigFloat z = x0 + 1L;
  for (int k = 1; k <= x.degree(); ++k) {
    BigFloat d = polygamma_num(k - 1, z, prec);
    taylor.push_back(d / BigFloat(factorial(static_cast<unsigned long>(k)), prec));
  }
  return compose(x, taylor);
}

}  // namespace gamma_asym
