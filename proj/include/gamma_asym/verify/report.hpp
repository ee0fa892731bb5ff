#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/exact/quad_ext.hpp"
#include "gamma_asym/fit/fit.hpp"
#include "gamma_asym/series/format.hpp"
#include "gamma_asym/verify/bounds.hpp"
#include "gamma_asym/verify/constants.hpp"
#include "gamma_asym/verify/probes.hpp"
#include "gamma_asym/verify/rate.hpp"

namespace gamma_asym {

enum class OutputFormat { text, json, csv };

inline OutputFormat format_from_name(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw domain_error("unknown output format '" + s + "' (expected text, json or csv)");
}

/// A report is a summary block of key/value pairs plus one table of rows.
/// Cells are strings already rendered; the JSON form keeps the same text so
/// that every format carries identical digits.
struct Report {
  std::string kind;
  std::vector<std::pair<std::string, Json>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  std::vector<std::pair<std::string, Json>> structured;  // JSON format only
  std::vector<std::string> notes;                        // text format only
  bool pass = true;

  void add(std::string key, Json value) { summary.emplace_back(std::move(key), std::move(value)); }
  void add_structured(std::string key, Json value) { structured.emplace_back(std::move(key), std::move(value)); }
};

inline std::string decimal(const BigFloat& x, int digits) {
  if (x.is_zero()) return "0";
  return x.to_scientific(digits);
}

inline std::string decimal(const QuadExt& v, int digits, int precision) {
  return decimal(to_float(v, precision), digits);
}

namespace detail {

inline std::string cell_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_null()) return "";
  if (j.is_object() && j.contains("text") && j.contains("decimal")) {
    return j["text"].get<std::string>() + " ≈ " + j["decimal"].get<std::string>();
  }
  return j.dump();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Display width in code points, good enough for the ASCII and math symbols
// used here.
inline std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

}  // namespace detail

inline std::string render_json(const Report& r) {
  Json j;
  j["report"] = r.kind;
  j["pass"] = r.pass;
  Json s = Json::object();
  for (const auto& [k, v] : r.summary) s[k] = v;
  for (const auto& [k, v] : r.structured) s[k] = v;
  j["summary"] = s;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json o = Json::object();
    for (std::size_t i = 0; i < r.columns.size() && i < row.size(); ++i) o[r.columns[i]] = row[i];
    rows.push_back(o);
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

/// RFC 4180: CRLF line ends, header row, quoting only where needed. The
/// summary block is not part of the CSV; it travels in the JSON and text forms.
inline std::string render_csv(const Report& r) {
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += detail::csv_field(fields[i]);
    }
    out += "\r\n";
  };
  line(r.columns);
  for (const auto& row : r.rows) {
    std::vector<std::string> f;
    for (const auto& c : row) f.push_back(detail::cell_text(c));
    line(f);
  }
  return out;
}

inline std::string render_text(const Report& r) {
  std::ostringstream os;
  for (const auto& [k, v] : r.summary) {
    if (v.is_array()) {
      os << k << ":\n";
      for (const auto& e : v) os << "  " << detail::cell_text(e) << "\n";
    } else {
      os << k << ": " << detail::cell_text(v) << "\n";
    }
  }
  if (!r.rows.empty()) {
    std::vector<std::size_t> w;
    for (const auto& c : r.columns) w.push_back(detail::width(c));
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : r.rows) {
      cells.emplace_back();
      for (std::size_t i = 0; i < row.size(); ++i) {
        cells.back().push_back(detail::cell_text(row[i]));
        if (i < w.size()) w[i] = std::max(w[i], detail::width(cells.back().back()));
      }
    }
    os << "\n";
    auto print = [&](const std::vector<std::string>& f) {
      std::string l;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) l += "  ";
        l += f[i];
        if (i + 1 < f.size()) l += std::string(w[i] - detail::width(f[i]), ' ');
      }
      os << l << "\n";
    };
    print(r.columns);
    for (const auto& c : cells) print(c);
  }
  for (const auto& n : r.notes) os << n << "\n";
  os << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline std::string render(const Report& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return render_json(r);
    case OutputFormat::csv: return render_csv(r);
    case OutputFormat::text: break;
  }
  return render_text(r);
}

// ---- builders ---------------------------------------------------------------

inline Json exact_with_decimal(const QuadExt& v, int digits, int precision) {
  Json j;
  j["exact"] = exact_to_json(v);
  j["text"] = v.to_string();
  j["decimal"] = decimal(v, digits, precision);
  return j;
}

inline Report rate_report(const std::string& name, const RateReport& r, int digits, int precision) {
  Report out;
  out.kind = "rate";
  out.add("formula", name);
  out.add("k", r.k);
  out.add("extrapolated", decimal(r.extrapolated, digits));
  if (r.target) {
    out.add("target", exact_with_decimal(*r.target, digits, precision));
    out.add("deviation_at_largest", decimal(*r.deviation_at_largest, 6));
    out.add("deviations_decreasing", r.deviations_decreasing());
    out.pass = r.deviations_decreasing();
  } else {
    out.add("target", nullptr);
  }
  out.add("precision_warning", r.precision_warning);
  if (r.precision_warning) {
    out.notes.push_back("warning: residual is within 2^16 ulps of lnΓ; raise --precision");
  }
  out.columns = {"x", "scaled_residual", "relative_deviation"};
  for (std::size_t i = 0; i < r.xs.size(); ++i) {
    Json dev = r.deviations.empty() ? Json("") : Json(decimal(r.deviations[i], 6));
    out.rows.push_back({decimal(r.xs[i], 8), decimal(r.scaled[i], digits), dev});
  }
  return out;
}

inline Report sweep_report(const BoundSpec& b, const SweepReport& r, int digits) {
  Report out;
  out.kind = "bounds";
  out.pass = r.pass;
  out.add("bound", b.name);
  out.add("description", b.description);
  out.add("domain", b.integer_domain ? "integers" : "reals");
  std::size_t failed = 0, attained = 0;
  for (const auto& row : r.rows) {
    failed += !row.ok;
    attained += row.attained;
  }
  out.add("points", r.rows.size());
  out.add("failed", failed);
  out.add("attained", attained);
  out.add("min_margin", r.min_margin ? Json(decimal(*r.min_margin, digits)) : Json(nullptr));
  out.add("min_margin_at", r.min_margin_at ? Json(decimal(*r.min_margin_at, 8)) : Json(nullptr));
  out.columns = {"x", "lower_margin", "upper_margin", "ok", "attained"};
  for (const auto& row : r.rows) {
    out.rows.push_back({decimal(row.x, 8), decimal(row.lower_margin, digits), decimal(row.upper_margin, digits), row.ok,
                        row.attained});
  }
  return out;
}

inline void append_probe_rows(Report& out, const ProbeReport& p, const std::string& quantity, int digits) {
  for (const auto& row : p.rows) {
    out.rows.push_back({quantity, p.order, decimal(row.x, 8), decimal(row.value, digits), row.sign, row.below_noise});
  }
}

inline Json probe_summary(const ProbeReport& p, const std::string& quantity) {
  Json j;
  j["quantity"] = quantity;
  j["order"] = p.order;
  j["sign_constant"] = p.sign_constant;
  j["observed_sign"] = p.observed_sign;
  j["expected_sign"] = p.expected_sign;
  j["precision_insufficient"] = p.precision_insufficient;
  j["counterexample"] = p.counterexample ? Json(decimal(*p.counterexample, 8)) : Json(nullptr);
  j["points"] = p.rows.size();
  j["matches_expected"] = p.matches_expected();
  return j;
}

inline std::string probe_line(const ProbeReport& p, const std::string& quantity) {
  std::string s = quantity + " n=" + std::to_string(p.order) + ": ";
  if (!p.sign_constant) return s + "sign changes (first at x = " + decimal(*p.counterexample, 8) + ")";
  s += p.observed_sign > 0 ? "positive" : "negative";
  s += " on all " + std::to_string(p.rows.size()) + " points";
  if (p.expected_sign != 0) s += p.matches_expected() ? " (as expected)" : " (NOT as expected)";
  if (p.precision_insufficient) s += " [below noise floor somewhere]";
  return s;
}

/// Derivative and recurrence-difference probes for one residual function.
inline Report probe_report(const std::string& which, const std::vector<ProbeReport>& derivatives,
                           const std::vector<ProbeReport>& recurrences, bool complete_monotonicity, int digits) {
  Report out;
  out.kind = "probe";
  const auto& rf = residual_function(which);
  out.add("function", which);
  out.add("formula", rf.preset);
  out.add("claim", rf.claim);
  Json checks = Json::array();
  std::vector<std::string> lines;
  auto quantity = [&](const ProbeReport& p) { return which + "^(" + std::to_string(p.order) + ")"; };
  for (const auto& p : derivatives) {
    checks.push_back(probe_summary(p, quantity(p)));
    lines.push_back(probe_line(p, quantity(p)));
    out.pass = out.pass && p.matches_expected();
  }
  for (const auto& p : recurrences) {
    std::string q = which + "''(x+1) - " + which + "''(x)";
    checks.push_back(probe_summary(p, q));
    lines.push_back(probe_line(p, q));
    out.pass = out.pass && p.matches_expected();
  }
  out.add_structured("checks", checks);
  if (complete_monotonicity) {
    out.add("verdict", out.pass ? "consistent with complete monotonicity on the grid" : "inconsistent with complete monotonicity");
  } else {
    out.add("verdict", out.pass ? "consistent with the measured signs" : "sign expectations not met");
  }
  if (which == "f4") {
    out.notes.push_back("note: the stated claim for f4 says convex, its argument derives concave; signs above are measured");
  }
  out.notes.insert(out.notes.begin(), lines.begin(), lines.end());
  out.columns = {"quantity", "order", "x", "value", "sign", "below_noise"};
  for (const auto& p : derivatives) append_probe_rows(out, p, quantity(p), digits);
  for (const auto& p : recurrences) append_probe_rows(out, p, which + "''(x+1) - " + which + "''(x)", digits);
  return out;
}

inline Report constants_report(const std::vector<ConstantCheck>& checks, int digits) {
  Report out;
  out.kind = "constants";
  std::size_t failed = 0;
  out.columns = {"id", "expression", "formula", "point", "printed", "measured", "closed_form", "digits_match",
                 "closed_form_match"};
  for (const auto& c : checks) {
    bool ok = c.digits_match && c.closed_form_match;
    failed += !ok;
    out.rows.push_back({c.constant.id, c.constant.label, c.constant.preset, c.constant.point,
                        c.constant.decimal, decimal(c.value, digits), c.closed ? Json(decimal(*c.closed, digits)) : Json(""),
                        c.digits_match, c.closed_form_match});
  }
  out.add("constants", checks.size());
  out.add("failed", failed);
  out.pass = failed == 0;
  return out;
}

inline Json assignment_to_json(const std::vector<std::pair<std::string, QuadExt>>& a, int digits, int precision) {
  Json j = Json::object();
  for (const auto& [n, v] : a) j[n] = exact_with_decimal(v, digits, precision);
  return j;
}

inline Report fit_report(const FitTemplate& t, const FitResult& r, int digits, int precision) {
  Report out;
  out.kind = "fit";
  out.add("template", t.formula.name);
  Json unknowns = Json::array();
  for (const auto& u : t.unknowns) unknowns.push_back(u);
  out.add("unknowns", unknowns);
  out.add("order", t.order);
  Json branches = Json::array();
  for (std::size_t i = 0; i < r.branches.size(); ++i) {
    const auto& b = r.branches[i];
    Json j;
    j["index"] = i;
    j["assignment"] = assignment_to_json(b.assignment, digits, precision);
    j["achieved_order"] = b.achieved_order;
    j["leading"] = b.leading ? exact_with_decimal(*b.leading, digits, precision) : Json(nullptr);
    j["log_order"] = b.log_order;
    j["formula"] = formula_to_json(b.formula);
    branches.push_back(j);
    std::string line = "branch " + std::to_string(i) + ":";
    for (const auto& [n, v] : b.assignment) line += " " + n + " = " + v.to_string() + ",";
    if (!b.assignment.empty()) line.pop_back();
    if (b.leading) {
      line += (b.assignment.empty() ? " " : "; ") + std::string("residual ") + b.leading->to_string() +
              detail::power_suffix(b.achieved_order);
      if (b.log_order) line += " (with ln x part)";
    } else {
      line += " residual vanishes through t^" + std::to_string(t.order);
    }
    out.notes.push_back(line);
  }
  out.add_structured("branches", branches);
  out.columns = {"branch", "power", "unknown", "equation"};
  for (const auto& s : r.solve_log) out.rows.push_back({s.branch, s.power, s.unknown, s.equation});
  return out;
}

inline Report expand_report(const std::string& name, const LogAffine<QuadExt>& e, int order, int digits, int precision) {
  Report out;
  out.kind = "expand";
  out.add("formula", name);
  out.add("order", order);
  out.add("a(t)", to_string(e.a()));
  out.add("b(t)", to_string(e.b()));
  auto rate = classify_rate(e);
  out.add("rate", rate.kind_name());
  if (rate.leading) {
    out.add("leading", rate.leading->to_string() + detail::power_suffix(rate.power));
    out.add("leading_decimal", decimal(*rate.leading, digits, precision));
  }
  out.add_structured("series", to_json(e));
  out.columns = {"part", "power", "exact", "decimal"};
  auto rows = [&](const char* part, const LaurentSeries<QuadExt>& s) {
    if (s.is_zero()) return;
    for (int k = s.valuation(); k < s.order(); ++k) {
      QuadExt c = s.coeff(k);
      if (c.is_zero()) continue;
      out.rows.push_back({part, k, c.to_string(), decimal(c, digits, precision)});
    }
  };
  rows("a", e.a());
  rows("b", e.b());
  return out;
}

}  // namespace gamma_asym
