#pragma once

#include "gamma_asym/errors.hpp"
#include "gamma_asym/exact/big_float.hpp"
#include "gamma_asym/exact/big_rational.hpp"
#include "gamma_asym/exact/quad_ext.hpp"
#include "gamma_asym/fit/fit.hpp"
#include "gamma_asym/fit/fit_template.hpp"
#include "gamma_asym/fit/symbolic_poly.hpp"
#include "gamma_asym/formulas/formula.hpp"
#include "gamma_asym/formulas/formula_eval.hpp"
#include "gamma_asym/formulas/formula_json.hpp"
#include "gamma_asym/formulas/formula_series.hpp"
#include "gamma_asym/formulas/presets.hpp"
#include "gamma_asym/means/mean_check.hpp"
#include "gamma_asym/means/mean_eval.hpp"
#include "gamma_asym/means/mean_expr.hpp"
#include "gamma_asym/means/mean_series.hpp"
#include "gamma_asym/numeric/compose.hpp"
#include "gamma_asym/numeric/jet.hpp"
#include "gamma_asym/series/evaluate.hpp"
#include "gamma_asym/series/format.hpp"
#include "gamma_asym/series/laurent_series.hpp"
#include "gamma_asym/series/log_affine.hpp"
#include "gamma_asym/special/bernoulli.hpp"
#include "gamma_asym/special/lngamma_expansion.hpp"
#include "gamma_asym/special/reference.hpp"
#include "gamma_asym/verify/bounds.hpp"
#include "gamma_asym/verify/constants.hpp"
#include "gamma_asym/verify/probes.hpp"
#include "gamma_asym/verify/rate.hpp"
#include "gamma_asym/verify/report.hpp"
