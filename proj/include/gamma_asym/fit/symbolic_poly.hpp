#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_rational.hpp"
#include "gamma_asym/exact/quad_ext.hpp"

namespace gamma_asym {

inline constexpr int kMaxUnknowns = 6;

/// Multivariate polynomial in at most kMaxUnknowns unknowns (referred to by
/// index) with coefficients in a quadratic field. Usable as the coefficient
/// ring of LaurentSeries.
class SymbolicPoly {
 public:
  using Monomial = std::array<std::uint8_t, kMaxUnknowns>;

  SymbolicPoly() = default;
  SymbolicPoly(int n) : SymbolicPoly(QuadExt(n)) {}  // NOLINT(google-explicit-constructor)
  SymbolicPoly(long n) : SymbolicPoly(QuadExt(n)) {}  // NOLINT(google-explicit-constructor)
  SymbolicPoly(const BigRational& c) : SymbolicPoly(QuadExt(c)) {}  // NOLINT(google-explicit-constructor)
  SymbolicPoly(const QuadExt& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }

  static SymbolicPoly variable(int index) {
    if (index < 0 || index >= kMaxUnknowns) throw domain_error("SymbolicPoly: at most 6 unknowns");
    SymbolicPoly p;
    Monomial m{};
    m[static_cast<std::size_t>(index)] = 1;
    p.terms_[m] = QuadExt(1);
    return p;
  }

  const std::map<Monomial, QuadExt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }

  QuadExt constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? QuadExt(0) : it->second;
  }

  QuadExt constant_value() const {
    if (!is_constant()) throw algebraic_error("SymbolicPoly: expression still depends on unknowns");
    return constant_term();
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[static_cast<std::size_t>(var)]));
    return d;
  }

  bool depends_on(int var) const { return degree_in(var) > 0; }

  /// Coefficients c_0..c_deg with self = Σ c_j var^j.
  std::vector<SymbolicPoly> coefficients_in(int var) const {
    std::vector<SymbolicPoly> out(static_cast<std::size_t>(degree_in(var) + 1));
    for (const auto& [m, c] : terms_) {
      Monomial r = m;
      int e = r[static_cast<std::size_t>(var)];
      r[static_cast<std::size_t>(var)] = 0;
      out[static_cast<std::size_t>(e)].terms_[r] = c;
    }
    return out;
  }

  /// self with `var` replaced by `value`.
  SymbolicPoly substitute(int var, const SymbolicPoly& value) const {
    auto cs = coefficients_in(var);
    SymbolicPoly result = cs.back();
    for (int j = static_cast<int>(cs.size()) - 2; j >= 0; --j) result = result * value + cs[static_cast<std::size_t>(j)];
    return result;
  }

  SymbolicPoly operator-() const {
    SymbolicPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend SymbolicPoly operator+(const SymbolicPoly& x, const SymbolicPoly& y) {
    SymbolicPoly r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
  }
  friend SymbolicPoly operator-(const SymbolicPoly& x, const SymbolicPoly& y) { return x + (-y); }

  friend SymbolicPoly operator*(const SymbolicPoly& x, const SymbolicPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (y.is_constant()) return x * y.constant_term();
    if (x.is_constant()) return y * x.constant_term();
    SymbolicPoly r;
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) {
        Monomial m;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint8_t>(mx[i] + my[i]);
        r.add_term(m, cx * cy);
      }
    }
    return r;
  }
  friend SymbolicPoly operator*(const SymbolicPoly& x, const QuadExt& s) {
    if (s.is_zero()) return {};
    SymbolicPoly r = x;
    for (auto& [m, c] : r.terms_) c = c * s;
    return r;
  }
  friend SymbolicPoly operator*(const SymbolicPoly& x, const BigRational& s) { return x * QuadExt(s); }

  SymbolicPoly& operator+=(const SymbolicPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SymbolicPoly& operator-=(const SymbolicPoly& o) { return *this += -o; }
  SymbolicPoly& operator*=(const SymbolicPoly& o) { return *this = *this * o; }

  friend bool operator==(const SymbolicPoly& x, const SymbolicPoly& y) { return x.terms_ == y.terms_; }

  /// Rendering with the given unknown names, highest total degree first.
  std::string to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::vector<std::pair<Monomial, QuadExt>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
      return total_degree(l.first) > total_degree(r.first);
    });
    std::string s;
    bool first = true;
    for (const auto& [m, c] : ordered) {
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "·";
        mono += i < names.size() ? names[i] : "u" + std::to_string(i);
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      bool negative = c.is_rational() && c.a().sign() < 0;
      QuadExt mag = negative ? -c : c;
      std::string coef = mag.to_string();
      std::string body = mono.empty() ? coef : (mag == QuadExt(1) ? mono : coef + "·" + mono);
      if (first) {
        s += negative ? "-" + body : body;
      } else {
        s += negative ? " - " + body : " + " + body;
      }
      first = false;
    }
    return s;
  }

 private:
  static int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
  }

  void add_term(const Monomial& m, const QuadExt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Monomial, QuadExt> terms_;
};

/// Inverse in the series ring: only nonzero constants are invertible.
inline SymbolicPoly ring_inverse(const SymbolicPoly& p) {
  if (!p.is_constant() || p.is_zero()) {
    throw series_error("reciprocal: leading coefficient must be a nonzero constant, not a polynomial in the unknowns");
  }
  return SymbolicPoly(p.constant_term().inverse());
}

}  // namespace gamma_asym
