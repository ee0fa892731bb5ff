#pragma once

#include <stdexcept>
#include <string>

namespace gamma_asym {

// Argument outside the mathematical domain of an operation (poles, nonpositive
// mean arguments, formula domain guards).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed or unsupported series manipulation (bad valuation, non-invertible
// leading coefficient, principal part too deep).
class series_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algebraic value left the supported quadratic extensions.
class algebraic_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sequential elimination met a coefficient it cannot solve.
class fit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input documents (JSON formulas, templates, bound specs) that do not parse.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gamma_asym
