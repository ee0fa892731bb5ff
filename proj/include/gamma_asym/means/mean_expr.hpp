#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_rational.hpp"

namespace gamma_asym {

enum class MeanKind { arithmetic, geometric, identric, logarithmic, power_product, rational, symmetric_rational };

inline const char* kind_name(MeanKind k) {
  switch (k) {
    case MeanKind::arithmetic: return "arithmetic";
    case MeanKind::geometric: return "geometric";
    case MeanKind::identric: return "identric";
    case MeanKind::logarithmic: return "logarithmic";
    case MeanKind::power_product: return "power_product";
    case MeanKind::rational: return "rational";
    case MeanKind::symmetric_rational: return "symmetric_rational";
  }
  return "?";
}

inline MeanKind kind_from_name(const std::string& s) {
  for (MeanKind k : {MeanKind::arithmetic, MeanKind::geometric, MeanKind::identric, MeanKind::logarithmic,
                     MeanKind::power_product, MeanKind::rational, MeanKind::symmetric_rational}) {
    if (s == kind_name(k)) return k;
  }
  if (s == "A") return MeanKind::arithmetic;
  if (s == "G") return MeanKind::geometric;
  if (s == "I") return MeanKind::identric;
  if (s == "L") return MeanKind::logarithmic;
  throw parse_error("unknown mean kind: " + s);
}

/// Symbolic bivariate mean with coefficients in R.
///
/// Rational means H^{n,n-1} store full vectors: p[k] multiplies a^k b^(n-k)
/// and q[k] multiplies a^k b^(n-1-k). The symmetric family S^{n,n-1} also
/// keeps the half vectors it was built from, where the middle entry of an
/// even-length side counts twice.
template <class R>
class MeanExpr {
 public:
  MeanExpr() : kind_(MeanKind::arithmetic) {}

  static MeanExpr arithmetic() { return MeanExpr(MeanKind::arithmetic); }
  static MeanExpr geometric() { return MeanExpr(MeanKind::geometric); }
  static MeanExpr identric() { return MeanExpr(MeanKind::identric); }
  static MeanExpr logarithmic() { return MeanExpr(MeanKind::logarithmic); }

  /// Π factors[i]^weights[i], weights summing to 1.
  static MeanExpr power_product(std::vector<MeanExpr> factors, std::vector<BigRational> weights) {
    if (factors.empty() || factors.size() != weights.size()) {
      throw domain_error("power_product: need one weight per factor");
    }
    BigRational total;
    for (const auto& w : weights) total += w;
    if (!(total == BigRational(1))) throw domain_error("power_product: weights sum to " + total.to_string() + ", not 1");
    MeanExpr m(MeanKind::power_product);
    m.factors_ = std::move(factors);
    m.weights_ = std::move(weights);
    return m;
  }

  /// H^{n,n-1} from full coefficient vectors (|p| = n+1, |q| = n).
  static MeanExpr rational(std::vector<R> p, std::vector<R> q) {
    if (p.size() < 2 || q.size() + 1 != p.size()) {
      throw domain_error("rational mean: need n+1 numerator and n denominator coefficients");
    }
    check_normalized(p, "numerator");
    check_normalized(q, "denominator");
    MeanExpr m(MeanKind::rational);
    m.p_ = std::move(p);
    m.q_ = std::move(q);
    return m;
  }

  /// S^{n,n-1} from half vectors of lengths [n/2]+1 and [(n-1)/2]+1.
  static MeanExpr symmetric(int n, std::vector<R> p_half, std::vector<R> q_half) {
    if (n < 1) throw domain_error("symmetric rational mean: degree must be >= 1");
    if (static_cast<int>(p_half.size()) != n / 2 + 1 || static_cast<int>(q_half.size()) != (n - 1) / 2 + 1) {
      throw domain_error("symmetric rational mean S^{" + std::to_string(n) + "," + std::to_string(n - 1) +
                         "}: expected " + std::to_string(n / 2 + 1) + " numerator and " +
                         std::to_string((n - 1) / 2 + 1) + " denominator half-coefficients");
    }
    MeanExpr m = rational(expand_half(n, p_half), expand_half(n - 1, q_half));
    m.kind_ = MeanKind::symmetric_rational;
    m.p_half_ = std::move(p_half);
    m.q_half_ = std::move(q_half);
    return m;
  }

  MeanKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == MeanKind::rational || kind_ == MeanKind::symmetric_rational; }
  /// Numerator degree n of a rational mean.
  int degree() const { return static_cast<int>(p_.size()) - 1; }
  const std::vector<R>& p() const { return p_; }
  const std::vector<R>& q() const { return q_; }
  const std::vector<R>& p_half() const { return p_half_; }
  const std::vector<R>& q_half() const { return q_half_; }
  const std::vector<MeanExpr>& factors() const { return factors_; }
  const std::vector<BigRational>& weights() const { return weights_; }

  bool is_symmetric() const {
    switch (kind_) {
      case MeanKind::rational: {
        for (std::size_t k = 0; k < p_.size(); ++k) {
          if (!(p_[k] == p_[p_.size() - 1 - k])) return false;
        }
        for (std::size_t k = 0; k < q_.size(); ++k) {
          if (!(q_[k] == q_[q_.size() - 1 - k])) return false;
        }
        return true;
      }
      case MeanKind::power_product:
        for (const auto& f : factors_) {
          if (!f.is_symmetric()) return false;
        }
        return true;
      default: return true;
    }
  }

  template <class F>
  auto map(F f) const -> MeanExpr<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    MeanExpr<S> r(kind_);
    for (const auto& x : p_) r.p_.push_back(f(x));
    for (const auto& x : q_) r.q_.push_back(f(x));
    for (const auto& x : p_half_) r.p_half_.push_back(f(x));
    for (const auto& x : q_half_) r.q_half_.push_back(f(x));
    for (const auto& x : factors_) r.factors_.push_back(x.map(f));
    r.weights_ = weights_;
    return r;
  }

  friend bool operator==(const MeanExpr& x, const MeanExpr& y) {
    return x.kind_ == y.kind_ && x.p_ == y.p_ && x.q_ == y.q_ && x.factors_ == y.factors_ && x.weights_ == y.weights_;
  }

  /// Short label such as "S^{3,2}" or "A^(2/3)·G^(1/3)".
  std::string label() const {
    switch (kind_) {
      case MeanKind::arithmetic: return "A";
      case MeanKind::geometric: return "G";
      case MeanKind::identric: return "I";
      case MeanKind::logarithmic: return "L";
      case MeanKind::rational: return "H^{" + std::to_string(degree()) + "," + std::to_string(degree() - 1) + "}";
      case MeanKind::symmetric_rational:
        return "S^{" + std::to_string(degree()) + "," + std::to_string(degree() - 1) + "}";
      case MeanKind::power_product: {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
          if (i) s += "·";
          s += factors_[i].label() + "^(" + weights_[i].to_string() + ")";
        }
        return s;
      }
    }
    return "?";
  }

 private:
  template <class S>
  friend class MeanExpr;

  explicit MeanExpr(MeanKind k) : kind_(k) {}

  static void check_normalized(const std::vector<R>& v, const char* side) {
    R total(0);
    for (const auto& x : v) total += x;
    if (!(total == R(1))) throw domain_error(std::string("rational mean: ") + side + " coefficients must sum to 1");
  }

  static std::vector<R> expand_half(int n, const std::vector<R>& half) {
    std::vector<R> full(static_cast<std::size_t>(n + 1), R(0));
    for (int k = 0; k <= n / 2; ++k) {
      const R& c = half[static_cast<std::size_t>(k)];
      if (2 * k == n) {
        full[static_cast<std::size_t>(k)] = c * BigRational(2);
      } else {
        full[static_cast<std::size_t>(k)] = c;
        full[static_cast<std::size_t>(n - k)] = c;
      }
    }
    return full;
  }

  MeanKind kind_;
  std::vector<R> p_, q_;
  std::vector<R> p_half_, q_half_;
  std::vector<MeanExpr> factors_;
  std::vector<BigRational> weights_;
};

}  // namespace gamma_asym
