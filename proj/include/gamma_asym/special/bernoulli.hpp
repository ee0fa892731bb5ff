#pragma once

#include <mutex>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_rational.hpp"

namespace gamma_asym {

/// Memoized Bernoulli numbers with B1 = -1/2, from
/// sum_{k=0}^{m} C(m+1, k) B_k = 0.
class BernoulliCache {
 public:
  static BernoulliCache& instance() {
    static BernoulliCache cache;
    return cache;
  }

  BigRational get(int n) {
    if (n < 0) throw domain_error("bernoulli: negative index");
    if (n > 1 && n % 2 == 1) return BigRational(0);
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(b_.size()) <= n) extend();
    return b_[static_cast<std::size_t>(n)];
  }

 private:
  BernoulliCache() { b_.push_back(BigRational(1)); }

  void extend() {
    auto m = static_cast<unsigned long>(b_.size());
    if (m > 1 && m % 2 == 1) {
      b_.push_back(BigRational(0));
      return;
    }
    BigRational acc;
    for (unsigned long k = 0; k < m; ++k) {
      if (b_[k].is_zero()) continue;
      acc += BigRational(binomial(m + 1, k)) * b_[k];
    }
    b_.push_back(-acc / BigRational(static_cast<long>(m + 1)));
  }

  std::mutex mu_;
  std::vector<BigRational> b_;
};

inline BigRational bernoulli(int n) { return BernoulliCache::instance().get(n); }

}  // namespace gamma_asym
