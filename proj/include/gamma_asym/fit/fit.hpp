#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/fit/fit_template.hpp"
#include "gamma_asym/fit/symbolic_poly.hpp"
#include "gamma_asym/formulas/formula_series.hpp"

namespace gamma_asym {

struct SolveStep {
  int power;            // k of the coefficient of t^k
  std::string equation;  // "c_k = 0" as a polynomial
  std::string unknown;   // solved unknown; empty when the coefficient vanished identically
  int branch;           // index of the branch this step belongs to (before sorting)
};

struct FitBranch {
  std::vector<std::pair<std::string, QuadExt>> assignment;  // in declaration order
  int achieved_order = 0;
  std::optional<QuadExt> leading;  // empty if the residual vanishes through the series order
  bool log_order = false;         // the residual has a nonzero ln x part
  Formula<QuadExt> formula;

  const QuadExt& value(const std::string& name) const {
    for (const auto& [n, v] : assignment) {
      if (n == name) return v;
    }
    throw domain_error("branch has no unknown named " + name);
  }
};

struct FitResult {
  std::vector<FitBranch> branches;
  std::vector<SolveStep> solve_log;
};

/// Coefficients of t^1..t^order of the b part of the error series.
inline std::vector<SymbolicPoly> symbolic_error_coefficients(const Formula<SymbolicPoly>& f, int order) {
  auto e = error_series(f, order);
  std::vector<SymbolicPoly> out;
  for (int k = 1; k <= order; ++k) out.push_back(e.b().coeff(k));
  return out;
}

inline std::vector<SymbolicPoly> symbolic_error_coefficients(const FitTemplate& t, int order) {
  return symbolic_error_coefficients(t.formula, order);
}

/// Rebuilds a concrete formula from a template and a full assignment.
inline Formula<QuadExt> instantiate(const FitTemplate& t, const std::vector<std::pair<std::string, QuadExt>>& values) {
  std::vector<SymbolicPoly> sub(t.unknowns.size());
  std::vector<bool> seen(t.unknowns.size(), false);
  for (const auto& [name, v] : values) {
    int i = t.index_of(name);
    if (i < 0) throw domain_error("unknown '" + name + "' is not declared by the template");
    sub[static_cast<std::size_t>(i)] = SymbolicPoly(v);
    seen[static_cast<std::size_t>(i)] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw domain_error("assignment leaves '" + t.unknowns[i] + "' free");
  }
  return t.formula.map([&](const SymbolicPoly& p) {
    SymbolicPoly r = p;
    for (std::size_t i = 0; i < sub.size(); ++i) r = r.substitute(static_cast<int>(i), sub[i]);
    return r.constant_value();
  });
}

namespace detail {

inline void fill_residual(FitBranch& b, int order) {
  auto rate = classify_rate(error_series(b.formula, order));
  b.achieved_order = rate.power;
  b.leading = rate.leading;
  b.log_order = rate.kind == ErrorRate<QuadExt>::Kind::log_order_residual;
  if (rate.kind == ErrorRate<QuadExt>::Kind::vanishes) b.achieved_order = order + 1;
}

class Fitter {
 public:
  explicit Fitter(const FitTemplate& t) : t_(t) {}

  FitResult run() {
    State s;
    s.formula = t_.formula;
    s.free.assign(t_.unknowns.size(), true);
    for (std::size_t i = 0; i < t_.unknowns.size(); ++i) s.solved.push_back(SymbolicPoly::variable(static_cast<int>(i)));
    s.order = std::min(t_.order, static_cast<int>(t_.unknowns.size()) + 2);
    s.coeffs = symbolic_error_coefficients(s.formula, s.order);
    s.k = 1;
    s.id = next_id_++;
    solve(std::move(s));
    std::stable_sort(result_.branches.begin(), result_.branches.end(), [](const FitBranch& x, const FitBranch& y) {
      if (x.achieved_order != y.achieved_order) return x.achieved_order > y.achieved_order;
      if (!x.leading || !y.leading) return bool(y.leading) && !x.leading;
      return to_float(*x.leading, 128) < to_float(*y.leading, 128);
    });
    return std::move(result_);
  }

 private:
  struct State {
    Formula<SymbolicPoly> formula;
    std::vector<SymbolicPoly> solved;  // unknown i as a polynomial in the still-free unknowns
    std::vector<bool> free;
    std::vector<SymbolicPoly> coeffs;  // coeffs[k-1] for t^k
    int order = 1;
    int k = 1;
    int id = 0;
  };

  bool any_free(const State& s) const { return std::find(s.free.begin(), s.free.end(), true) != s.free.end(); }

  std::string names_of_free(const State& s) const {
    std::string out;
    for (std::size_t i = 0; i < s.free.size(); ++i) {
      if (!s.free[i]) continue;
      if (!out.empty()) out += ", ";
      out += t_.unknowns[i];
    }
    return out;
  }

  void finish(State& s) {
    FitBranch b;
    for (std::size_t i = 0; i < t_.unknowns.size(); ++i) b.assignment.emplace_back(t_.unknowns[i], s.solved[i].constant_value());
    b.formula = instantiate(t_, b.assignment);
    fill_residual(b, t_.order);
    result_.branches.push_back(std::move(b));
  }

  static State substitute(const State& s, int var, const SymbolicPoly& value) {
    State r = s;
    r.formula = s.formula.map([&](const SymbolicPoly& p) { return p.substitute(var, value); });
    for (auto& e : r.solved) e = e.substitute(var, value);
    for (auto& c : r.coeffs) c = c.substitute(var, value);
    r.free[static_cast<std::size_t>(var)] = false;
    return r;
  }

  void solve(State s) {
    while (any_free(s)) {
      if (s.k > s.order) {
        if (s.order >= t_.order) {
          throw fit_error("unknowns " + names_of_free(s) + " remain undetermined after cancelling through t^" +
                          std::to_string(t_.order));
        }
        s.order = std::min(t_.order, s.order + 2);
        s.coeffs = symbolic_error_coefficients(s.formula, s.order);
        continue;
      }
      const SymbolicPoly& c = s.coeffs[static_cast<std::size_t>(s.k - 1)];
      std::string eq = "c_" + std::to_string(s.k) + " = " + c.to_string(t_.unknowns);
      if (c.is_zero()) {
        result_.solve_log.push_back({s.k, eq, "", s.id});
        ++s.k;
        continue;
      }
      int var = -1, best = 0;
      for (std::size_t i = 0; i < s.free.size(); ++i) {
        if (!s.free[i]) continue;
        int d = c.degree_in(static_cast<int>(i));
        if (d > 0 && (var < 0 || d < best)) {
          var = static_cast<int>(i);
          best = d;
        }
      }
      if (var < 0) {
        throw fit_error("coefficient of t^" + std::to_string(s.k) + " is the nonzero constant " +
                        c.constant_term().to_string() + "; unknowns " + names_of_free(s) + " cannot cancel it");
      }
      const std::string& vname = t_.unknowns[static_cast<std::size_t>(var)];
      auto cs = c.coefficients_in(var);
      if (best == 1) {
        if (!cs[1].is_constant()) {
          throw fit_error("coefficient of t^" + std::to_string(s.k) + " is linear in " + vname +
                          " with a non-constant pivot; simultaneous elimination is not supported");
        }
        SymbolicPoly value = -cs[0] * cs[1].constant_term().inverse();
        result_.solve_log.push_back({s.k, eq, vname, s.id});
        s = substitute(s, var, value);
        ++s.k;
        continue;
      }
      if (best == 2) {
        SymbolicPoly disc = cs[1] * cs[1] - cs[2] * cs[0] * BigRational(4);
        if (!cs[2].is_constant() || !disc.is_constant()) {
          throw fit_error("coefficient of t^" + std::to_string(s.k) + " is quadratic in " + vname +
                          " but its leading coefficient or discriminant still depends on other unknowns");
        }
        QuadExt root = sqrt_exact(disc.constant_term());
        QuadExt inv2a = (cs[2].constant_term() * BigRational(2)).inverse();
        result_.solve_log.push_back({s.k, eq, vname, s.id});
        std::vector<SymbolicPoly> values{(-cs[1] + SymbolicPoly(root)) * inv2a};
        if (!root.is_zero()) values.push_back((-cs[1] - SymbolicPoly(root)) * inv2a);
        for (std::size_t b = 0; b < values.size(); ++b) {
          State child = substitute(s, var, values[b]);
          ++child.k;
          if (b > 0) child.id = next_id_++;
          solve(std::move(child));
        }
        return;
      }
      throw fit_error("coefficient of t^" + std::to_string(s.k) + " has degree " + std::to_string(best) +
                      " > 2 in every free unknown");
    }
    finish(s);
  }

  const FitTemplate& t_;
  FitResult result_;
  int next_id_ = 0;
};

}  // namespace detail

/// Sequential elimination of the error-series coefficients, lowest power first.
inline FitResult fit(const FitTemplate& t) {
  check_template_limits(t);
  return detail::Fitter(t).run();
}

struct BranchCheck {
  bool matches = false;
  int order = 0;
  std::optional<QuadExt> leading;
};

/// Recomputes the residual of a branch's assignment and compares it exactly
/// with the branch's recorded order and leading coefficient.
inline BranchCheck verify_branch(const FitTemplate& t, const FitBranch& b) {
  FitBranch fresh;
  fresh.formula = instantiate(t, b.assignment);
  detail::fill_residual(fresh, t.order);
  return {fresh.achieved_order == b.achieved_order && fresh.leading == b.leading, fresh.achieved_order, fresh.leading};
}

}  // namespace gamma_asym
