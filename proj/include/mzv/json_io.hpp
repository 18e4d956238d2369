#pragma once

#include <json.hpp>

#include "mzv/numerics.hpp"
#include "mzv/stuffle.hpp"
#include "mzv/zeta_polynomial.hpp"

namespace mzv::json_io {

using nlohmann::json;

// {"terms": [{"atoms": [k, ...], "coeff": "p/q"}, ...]}, display order.
json to_json(const ZetaPolynomial& p);
ZetaPolynomial zeta_polynomial_from_json(const json& j);

// [{"composition": [2, "s1", "3/2"], "coeff": "p/q"}, ...]; integer
// arguments as JSON numbers, everything else as strings.
json to_json(const stuffle::FormalMZVSum& s);
stuffle::FormalMZVSum formal_sum_from_json(const json& j);

// {"value": "...", "error_estimate": "...", "truncation": m or "y"} with
// decimals at ctx.working_digits.
json to_json(const numerics::EvalResult& r, const PrecisionContext& ctx);
numerics::EvalResult eval_result_from_json(const json& j, const PrecisionContext& ctx);

}  // namespace mzv::json_io
