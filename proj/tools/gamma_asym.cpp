// gamma-asym: presets, expansions, fits and numeric checks from the command line.
//
// Exit codes: 0 pass, 2 a check failed, 1 usage or input error.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gamma_asym.hpp"

namespace ga = gamma_asym;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

struct CliConfig {
  int precision = 60;  // decimal digits
  int order = 12;
  std::string format = "text";
  std::string out;

  int bits() const { return static_cast<int>(std::ceil(precision * std::log2(10.0))) + 16; }
  ga::OutputFormat output_format() const { return ga::format_from_name(format); }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ga::Json read_json(const std::string& path) {
  try {
    return ga::Json::parse(read_file(path));
  } catch (const ga::Json::parse_error& e) {
    throw UsageError(path + ": bad JSON: " + e.what());
  }
}

bool is_preset(const std::string& name) {
  for (const auto& p : ga::presets()) {
    if (p.name == name) return true;
  }
  return false;
}

// A preset name, or a path to a formula JSON document.
ga::Formula<ga::QuadExt> load_formula(const std::string& arg) {
  if (is_preset(arg)) return ga::preset(arg).formula;
  if (!std::filesystem::exists(arg)) throw UsageError("unknown preset or missing file: " + arg);
  return ga::formula_from_json(read_json(arg));
}

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw UsageError("cannot write " + cfg.out);
  out << text;
}

int emit_report(const CliConfig& cfg, const ga::Report& r) {
  emit(cfg, ga::render(r, cfg.output_format()));
  return r.pass ? kExitPass : kExitFail;
}

std::vector<ga::BigFloat> parse_points(const std::string& list, int bits) {
  std::vector<ga::BigFloat> xs;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      xs.push_back(ga::BigFloat::parse(item, bits));
    } catch (const std::exception&) {
      throw UsageError("bad sample point '" + item + "'");
    }
  }
  if (xs.empty()) throw UsageError("no sample points given");
  return xs;
}

// "a..b" or a single order.
std::pair<int, int> parse_orders(const std::string& s) {
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
      int n = std::stoi(s);
      return {n, n};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad order range '" + s + "' (expected n or a..b)");
  }
}

// "+,-,0" into signs for consecutive orders.
std::vector<int> parse_signs(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "+" || item == "+1" || item == "1") {
      out.push_back(1);
    } else if (item == "-" || item == "-1") {
      out.push_back(-1);
    } else if (item == "0" || item == "?") {
      out.push_back(0);
    } else {
      throw UsageError("bad sign '" + item + "' (expected +, - or 0)");
    }
  }
  return out;
}

// Signs claimed for f3..f7 at orders 1 and 2. f4's second derivative has two
// conflicting claims, so it is only reported.
int claimed_sign(const std::string& which, int n) {
  if (which == "f1" || which == "f2") return n % 2 == 0 ? 1 : -1;
  struct Claim {
    const char* id;
    int first, second;
  };
  static const Claim claims[] = {{"f3", 1, -1}, {"f4", 1, 0}, {"f5", -1, 1}, {"f6", 1, -1}, {"f7", -1, 1}};
  for (const auto& c : claims) {
    if (which == c.id) return n == 1 ? c.first : (n == 2 ? c.second : 0);
  }
  return 0;
}

int recurrence_sign(const std::string& which) {
  if (which == "f3" || which == "f4") return 1;
  if (which == "f5") return -1;
  return 0;
}

// ---- commands ---------------------------------------------------------------

int cmd_presets(const CliConfig& cfg, const std::string& filter, bool json) {
  std::vector<const ga::Preset*> chosen;
  for (const auto& p : ga::presets()) {
    if (filter.empty() || p.name.find(filter) != std::string::npos) chosen.push_back(&p);
  }
  if (json || cfg.output_format() == ga::OutputFormat::json) {
    ga::Json arr = ga::Json::array();
    for (const auto* p : chosen) {
      ga::Json j;
      j["name"] = p->name;
      j["tag"] = p->tag;
      j["summary"] = p->summary;
      j["shape"] = ga::shape_name(ga::classify_shape(p->formula));
      j["formula"] = ga::formula_to_json(p->formula);
      arr.push_back(j);
    }
    emit(cfg, arr.dump(2) + "\n");
    return kExitPass;
  }
  ga::Report r;
  r.kind = "presets";
  r.columns = {"name", "tag", "summary"};
  for (const auto* p : chosen) r.rows.push_back({p->name, p->tag, p->summary});
  if (cfg.output_format() == ga::OutputFormat::csv) return emit_report(cfg, r);
  std::string text;
  for (const auto* p : chosen) text += p->name + " (" + p->tag + "): " + p->summary + "\n";
  emit(cfg, text);
  return kExitPass;
}

int cmd_expand(const CliConfig& cfg, const std::string& what) {
  auto f = load_formula(what);
  auto e = ga::error_series(f, cfg.order);
  return emit_report(cfg, ga::expand_report(f.name, e, cfg.order, cfg.precision, cfg.bits()));
}

int cmd_fit(const CliConfig& cfg, const std::string& file, bool order_given, int problem, int problem_n) {
  ga::FitTemplate t;
  if (problem != 0) {
    if (!file.empty()) throw UsageError("give either a template file or --problem, not both");
    t = ga::open_problem_template(problem, problem_n, order_given ? cfg.order : 12);
  } else {
    if (file.empty()) throw UsageError("fit needs a template file or --problem");
    t = ga::template_from_json(read_json(file));
    if (order_given) t.order = cfg.order;
  }
  auto result = ga::fit(t);
  return emit_report(cfg, ga::fit_report(t, result, cfg.precision, cfg.bits()));
}

int cmd_rate(const CliConfig& cfg, const std::string& what, std::optional<int> k, const std::string& points,
             double tolerance) {
  auto f = load_formula(what);
  int bits = cfg.bits();
  auto rate = ga::classify_rate(ga::error_series(f, cfg.order));
  int power = k ? *k : rate.power;
  auto rep = ga::measure_rate(f, power, parse_points(points, bits), bits);
  auto r = ga::rate_report(f.name, rep, cfg.precision, bits);
  if (!rep.target) {
    r.pass = false;
    r.notes.push_back("the error series is " + std::string(rate.kind_name()) + " with leading power " +
                      std::to_string(rate.power) + ", not a pure t^" + std::to_string(power));
  } else {
    bool within = *rep.deviation_at_largest <= ga::BigFloat(tolerance, bits);
    r.add("tolerance", tolerance);
    r.add("within_tolerance", within);
    r.pass = r.pass && within;
  }
  return emit_report(cfg, r);
}

int cmd_bounds(const CliConfig& cfg, const std::string& name, std::optional<double> from, std::optional<double> to,
               std::optional<int> n, bool list) {
  if (list || name.empty()) {
    ga::Report r;
    r.kind = "bounds";
    r.columns = {"name", "domain", "range", "description"};
    for (const auto& b : ga::bound_specs()) {
      std::ostringstream range;
      range << b.from << ".." << b.to;
      r.rows.push_back({b.name, b.integer_domain ? "integers" : "reals", range.str(), b.description});
    }
    return emit_report(cfg, r);
  }
  int bits = cfg.bits();
  auto run = [&](const ga::BoundSpec& b) {
    double lo = from.value_or(b.from), hi = to.value_or(b.to);
    int pts = n.value_or(b.points);
    if (!(lo < hi) && !(b.integer_domain && lo == hi)) throw UsageError("--from must be below --to");
    auto rep = ga::inequality_sweep(b, ga::sweep_grid(b, lo, hi, pts, bits), bits);
    return ga::sweep_report(b, rep, std::min(cfg.precision, 30));
  };
  if (name != "all") {
    try {
      return emit_report(cfg, run(ga::bound_spec(name)));
    } catch (const ga::domain_error& e) {
      throw UsageError(e.what());
    }
  }
  ga::Report all;
  all.kind = "bounds";
  all.columns = {"bound", "points", "failed", "min_margin", "min_margin_at", "pass"};
  for (const auto& b : ga::bound_specs()) {
    auto r = run(b);
    auto get = [&](const char* key) -> ga::Json {
      for (const auto& [k, v] : r.summary) {
        if (k == key) return v;
      }
      return nullptr;
    };
    all.rows.push_back({b.name, get("points"), get("failed"), get("min_margin"), get("min_margin_at"), r.pass});
    all.pass = all.pass && r.pass;
  }
  return emit_report(cfg, all);
}

int cmd_probe(const CliConfig& cfg, const std::string& what, const std::string& orders_text,
              const std::string& expect_text, std::optional<double> from, std::optional<double> to, int points,
              bool jets) {
  int bits = cfg.bits();
  auto method = jets ? ga::DerivativeMethod::jets : ga::DerivativeMethod::closed_form;
  bool named = what.size() == 2 && what[0] == 'f' && what[1] >= '1' && what[1] <= '7';
  auto [lo_order, hi_order] =
      parse_orders(orders_text.empty() ? (named && (what == "f1" || what == "f2") ? "0..3" : "1..2") : orders_text);
  if (lo_order < 0 || hi_order > 4 || lo_order > hi_order) throw UsageError("orders must lie in 0..4");
  std::vector<int> expect = parse_signs(expect_text);
  if (!expect.empty() && expect.size() != static_cast<std::size_t>(hi_order - lo_order + 1)) {
    throw UsageError("--expect needs one sign per order");
  }

  ga::Formula<ga::QuadExt> f;
  double start;
  if (named) {
    const auto& rf = ga::residual_function(what);
    f = ga::preset(rf.preset).formula;
    start = rf.domain_start;
  } else {
    f = load_formula(what);
    start = ga::formula_domain_start(f, bits).to_double();
  }
  std::vector<ga::BigFloat> grid;
  if (from || to || points != 60) {
    double lo = from.value_or(start < 0 ? start + 0.1 : 0.1), hi = to.value_or(start < 0 ? 50 : 100);
    if (!(lo > start) || !(lo < hi)) throw UsageError("grid must lie inside the open domain and satisfy from < to");
    grid = ga::domain_grid(start, lo, hi, points, bits);
  } else if (named) {
    grid = ga::default_probe_grid(what, bits);
  } else {
    grid = ga::domain_grid(start, start < 0 ? start + 0.1 : 0.1, start < 0 ? 50 : 100, points, bits);
  }

  std::vector<ga::ProbeReport> derivatives, recurrences;
  for (int order = lo_order; order <= hi_order; ++order) {
    int sign = expect.empty() ? (named ? claimed_sign(what, order) : 0)
                              : expect[static_cast<std::size_t>(order - lo_order)];
    derivatives.push_back(ga::derivative_probe(f, start, {what, order, grid, sign}, bits, method));
  }
  if (named && recurrence_sign(what) != 0) {
    recurrences.push_back(ga::recurrence_difference_probe(what, grid, recurrence_sign(what), bits));
  }
  std::string label = named ? what : f.name;
  ga::Report r;
  if (named) {
    r = ga::probe_report(what, derivatives, recurrences, what == "f1" || what == "f2", std::min(cfg.precision, 30));
  } else {
    r.kind = "probe";
    r.add("formula", label);
    r.columns = {"quantity", "order", "x", "value", "sign", "below_noise"};
    for (const auto& p : derivatives) {
      std::string q = "residual^(" + std::to_string(p.order) + ")";
      r.notes.push_back(ga::probe_line(p, q));
      ga::append_probe_rows(r, p, q, std::min(cfg.precision, 30));
      r.pass = r.pass && p.matches_expected();
    }
  }
  if (what == "f1") {
    bool u_positive = true;
    for (int n = 3; n <= 10; ++n) u_positive = u_positive && ga::u_series_coefficient(n).sign() > 0;
    bool wilker_positive = true;
    for (const auto& t : ga::log_grid(ga::BigFloat(1e-3, bits), ga::BigFloat(20L, bits), 200)) {
      wilker_positive = wilker_positive && ga::wilker_expression(t).sign() > 0;
    }
    r.add("u_series_positive_n3_to_10", u_positive);
    r.add("wilker_positive_on_grid", wilker_positive);
    r.pass = r.pass && u_positive && wilker_positive;
  }
  return emit_report(cfg, r);
}

int cmd_constants(const CliConfig& cfg) {
  std::vector<ga::ConstantCheck> checks;
  for (const auto& c : ga::published_constants()) checks.push_back(ga::check_constant(c, cfg.bits()));
  return emit_report(cfg, ga::constants_report(checks, std::min(cfg.precision, 30)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic formulas for the gamma function from bivariate means"};
  app.name("gamma-asym");
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  if (const char* env = std::getenv("GAMMA_ASYM_PRECISION")) {
    try {
      cfg.precision = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "gamma-asym: GAMMA_ASYM_PRECISION must be an integer\n";
      return kExitUsage;
    }
  }
  app.add_option("--precision", cfg.precision, "working precision in decimal digits (>= 16)");
  auto* order_opt = app.add_option("--order", cfg.order, "series order: terms through t^order, in [2, 40]");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", cfg.out, "write output to a file instead of stdout");

  auto* presets = app.add_subcommand("presets", "list the built-in formulas");
  std::string filter;
  bool presets_json = false;
  presets->add_option("--filter", filter, "substring of the preset name");
  presets->add_flag("--json", presets_json, "JSON array output");

  auto* expand = app.add_subcommand("expand", "print the error series lnΓ(x+1) - ln f(x) in t = 1/x");
  std::string expand_what;
  expand->add_option("formula", expand_what, "preset name or formula JSON file")->required();

  auto* fit = app.add_subcommand("fit", "solve a template's unknowns by cancelling series coefficients");
  std::string fit_file;
  int problem = 0, problem_n = 2;
  fit->add_option("template", fit_file, "template JSON file");
  fit->add_option("--problem", problem, "built-in open-problem family (1, 2 or 3) instead of a file")
      ->check(CLI::Range(1, 3));
  fit->add_option("-n", problem_n, "family parameter n for --problem")->check(CLI::Range(2, 5));

  auto* rate = app.add_subcommand("rate", "measure (lnΓ(x+1) - ln f(x))·x^k at sample points");
  std::string rate_what, rate_points = "100,1000,10000";
  std::optional<int> rate_k;
  double tolerance = 0.005;
  rate->add_option("formula", rate_what, "preset name or formula JSON file")->required();
  rate->add_option("-k", rate_k, "exponent k (default: leading power of the error series)");
  rate->add_option("-x", rate_points, "comma-separated sample points, increasing");
  rate->add_option("--tolerance", tolerance, "allowed relative deviation at the largest point");

  auto* bounds = app.add_subcommand("bounds", "sweep a double inequality over a grid");
  std::string bound_name;
  std::optional<double> b_from, b_to;
  std::optional<int> b_n;
  bool b_list = false;
  bounds->add_option("name", bound_name, "bound name, or 'all'");
  bounds->add_option("--from", b_from, "grid start");
  bounds->add_option("--to", b_to, "grid end");
  bounds->add_option("-n", b_n, "number of grid points (real domains)");
  bounds->add_flag("--list", b_list, "list the available bounds");

  auto* probe = app.add_subcommand("probe", "derivative sign probes of a residual function");
  std::string probe_what, probe_orders, probe_expect;
  std::optional<double> p_from, p_to;
  int p_points = 60;
  bool p_jets = false;
  probe->add_option("function", probe_what, "f1..f7, a preset name or a formula JSON file")->required();
  probe->add_option("--orders", probe_orders, "derivative orders, n or a..b (at most 4)");
  probe->add_option("--expect", probe_expect, "expected signs per order, e.g. +,-");
  probe->add_option("--from", p_from, "grid start (inside the open domain)");
  probe->add_option("--to", p_to, "grid end");
  probe->add_option("-n", p_points, "grid points")->check(CLI::Range(2, 100000));
  probe->add_flag("--jets", p_jets, "use jets at every order instead of differences beyond order 2");

  auto* constants = app.add_subcommand("constants", "check the best constants of the double inequalities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cfg.precision < 16) throw UsageError("--precision must be at least 16 digits");
    if (cfg.order < 2 || cfg.order > 40) throw UsageError("--order must lie in [2, 40]");
    if (presets->parsed()) return cmd_presets(cfg, filter, presets_json);
    if (expand->parsed()) return cmd_expand(cfg, expand_what);
    if (fit->parsed()) return cmd_fit(cfg, fit_file, order_opt->count() > 0, problem, problem_n);
    if (rate->parsed()) return cmd_rate(cfg, rate_what, rate_k, rate_points, tolerance);
    if (bounds->parsed()) return cmd_bounds(cfg, bound_name, b_from, b_to, b_n, b_list);
    if (probe->parsed()) return cmd_probe(cfg, probe_what, probe_orders, probe_expect, p_from, p_to, p_points, p_jets);
    if (constants->parsed()) return cmd_constants(cfg);
  } catch (const UsageError& e) {
    std::cerr << "gamma-asym: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // Library errors come from the inputs: unknown names, bad documents,
    // domain violations, unsupported fits.
    std::cerr << "gamma-asym: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
