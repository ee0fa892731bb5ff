#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/quad_ext.hpp"
#include "gamma_asym/formulas/formula.hpp"

namespace gamma_asym {

struct Preset {
  std::string name;
  std::string tag;      // short label of the classical display
  std::string summary;  // the formula for Γ(x+1) in plain text
  Formula<QuadExt> formula;
};

namespace detail {

using Q = BigRational;
using Mean = MeanExpr<QuadExt>;

inline ShiftedMean<QuadExt> at(Mean m, QuadExt first, QuadExt second) {
  return {std::move(m), std::move(first), std::move(second)};
}
inline ShiftedMean<QuadExt> a01() { return at(Mean::arithmetic(), 0, 1); }

inline Formula<QuadExt> stirling_base(std::string name) {
  return {std::move(name), a01(), at(Mean::arithmetic(), 0, 0), std::nullopt, {}};
}

inline Mean s32(const Q& p, const Q& q) {
  return Mean::symmetric(3, {p, Q(1, 2) - p}, {q, Q(1, 2) - q});
}

// H^{2,1} with numerator (p, 1-p-q, q) and denominator (r, 1-r).
inline Mean h21(const QuadExt& p, const QuadExt& q, const QuadExt& r) {
  QuadExt one(1);
  return Mean::rational({p, one - p - q, q}, {r, one - r});
}

inline QuadExt surd3(const Q& a, const Q& b) { return QuadExt(a, b, BigInt(3)); }

inline std::vector<Preset> build_presets() {
  std::vector<Preset> out;
  auto add = [&](std::string tag, std::string summary, Formula<QuadExt> f) {
    std::string name = f.name;
    out.push_back({std::move(name), std::move(tag), std::move(summary), std::move(f)});
  };

  add("Eq. S", "√(2πx)·x^x·e^(-x)", stirling_base("stirling"));

  add("Eq. B", "√(2π)·((x+1/2)/e)^(x+1/2)", {"burnside", a01(), a01(), std::nullopt, {}});

  {
    auto f = stirling_base("gosper");
    f.r.push_back(RTerm::log_of(Q(1, 2), {Q(1, 6), Q(1)}, {Q(0), Q(1)}));
    add("Eq. G", "√(2π(x+1/6))·(x/e)^x", f);
  }
  {
    auto f = stirling_base("batir1");
    f.r.push_back(RTerm::log_of(Q(-1, 2), {Q(-1, 6), Q(1)}, {Q(0), Q(1)}));
    add("Eq. Batir1", "x^(x+1)·e^(-x)·√(2π)/√(x-1/6)", f);
  }
  {
    Mean s21 = Mean::symmetric(2, {Q(1, 6), Q(1, 3)}, {Q(1, 2)});
    Mean m = Mean::power_product({Mean::arithmetic(), s21}, {Q(1, 2), Q(1, 2)});
    add("Eq. M", "√(2π)·((x²+x+1/6)/e²)^(x/2+1/4)", {"mortici_m", a01(), at(m, 0, 1), a01(), {}});
  }
  for (auto [name, c, text] : {std::tuple{"ramanujan_upper", Q(1, 30), "1/30"},
                               std::tuple{"ramanujan_lower", Q(1, 100), "1/100"}}) {
    auto f = stirling_base(name);
    f.r.push_back(RTerm::log_of(Q(1, 6), {c, Q(1), Q(4), Q(8)}, {Q(0), Q(0), Q(0), Q(8)}));
    add("Eq. R", std::string("√π·(x/e)^x·(8x³+4x²+x+") + text + ")^(1/6)", f);
  }
  {
    auto f = stirling_base("batir2");
    f.r.push_back(RTerm::log_of(Q(1, 2), {Q(1, 2), Q(1)}, {Q(0), Q(1)}));
    f.r.push_back(RTerm::fraction({Q(-1, 6)}, {Q(3, 8), Q(1)}));
    add("Eq. Batir2", "√(2π)·(x/e)^x·√(x+1/2)·exp(-1/(6(x+3/8)))", f);
  }
  {
    QuadExt w = surd3(Q(1, 2), Q(-1, 6));
    add("Eq. Ml", "√(2πe)·e^(-ω)·((x+ω)/e)^(x+1/2), ω = (3-√3)/6",
        {"mortici_omega", a01(), at(Mean::arithmetic(), w, w), std::nullopt, {}});
    QuadExt s = surd3(Q(1, 2), Q(1, 6));
    add("Eq. Mr", "√(2πe)·e^(-ς)·((x+ς)/e)^(x+1/2), ς = (3+√3)/6",
        {"mortici_sigma", a01(), at(Mean::arithmetic(), s, s), std::nullopt, {}});
  }
  {
    Mean ag = Mean::power_product({Mean::arithmetic(), Mean::geometric()}, {Q(2, 3), Q(1, 3)});
    add("A^(2/3)G^(1/3)", "√(2π)·(A^(2/3)G^(1/3)(x,x+1))^(x+1/2)·e^(-x-1/2)", {"example1", a01(), at(ag, 0, 1), a01(), {}});
  }
  add("I", "√(2π)·I(x,x+1)^(x+1/2)·e^(-x-1/2)",
      {"example2", a01(), at(Mean::identric(), 0, 1), a01(), {}});
  add("S^{3,2}", "√(2π)·S^{3,2}(x,x+1)^(x+1/2)·e^(-x-1/2), p = 23/160, q = 79/240",
      {"example3", a01(), at(s32(Q(23, 160), Q(79, 240)), 0, 1), a01(), {}});
  add("S^{3,2} sub-mean", "√(2π)·((x+1/2)/e^(S^{3,2}(x,x+1)/(x+1/2)))^(x+1/2), p = 7/40, q = 37/120",
      {"example4", a01(), a01(), at(s32(Q(7, 40), Q(37, 120)), 0, 1), {}});
  {
    Q p(3281, 20160), q(7303, 35280), r(111, 392);
    Mean n43 = Mean::symmetric(4, {p, q, Q(1, 2) - p - q}, {r, Q(1, 2) - r});
    add("Eq. N4/3", "√(2π)·(x+1/2)^(x+1/2)·exp(-N_{4/3}(x,x+1))", {"example5", a01(), a01(), at(n43, 0, 1), {}});
  }
  for (int branch = 0; branch < 2; ++branch) {
    int s = branch == 0 ? 1 : -1;
    Mean h = h21(surd3(Q(129, 360), Q(-59 * s, 360)), surd3(Q(129, 360), Q(59 * s, 360)),
                 surd3(Q(90, 180), Q(-29 * s, 180)));
    std::string name = branch == 0 ? "example6_m1" : "example6_m2";
    add("H^{2,1}", "√(2π)·H(x,x+1)^(x+1/2)·e^(-H(x,x+1)), branch " + std::to_string(branch + 1),
        {name, a01(), at(h, 0, 1), std::nullopt, {}});
  }
  return out;
}

}  // namespace detail

inline const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = detail::build_presets();
  return all;
}

inline const Preset& preset(const std::string& name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw domain_error("unknown preset: " + name);
}

}  // namespace gamma_asym
