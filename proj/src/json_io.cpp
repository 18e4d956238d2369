#include "mzv/json_io.hpp"

#include "mzv/errors.hpp"

namespace mzv::json_io {

json to_json(const ZetaPolynomial& p) {
  json terms = json::array();
  for (const auto& [mono, coeff] : p.terms())
    terms.push_back({{"atoms", mono.atoms()}, {"coeff", to_string(coeff)}});
  return {{"terms", terms}};
}

ZetaPolynomial zeta_polynomial_from_json(const json& j) {
  ZetaPolynomial p;
  for (const json& t : j.at("terms"))
    p.add_term(ZetaMonomial(t.at("atoms").get<std::vector<int>>()), parse_rational(t.at("coeff").get<std::string>()));
  return p;
}

json to_json(const stuffle::FormalMZVSum& s) {
  json out = json::array();
  for (const auto& [comp, coeff] : s.terms()) {
    json args = json::array();
    for (const stuffle::Token& t : comp.args()) {
      if (t.is_integer())
        args.push_back(numerator(t.value()).convert_to<long long>());
      else
        args.push_back(t.to_string());
    }
    out.push_back({{"composition", args}, {"coeff", to_string(coeff)}});
  }
  return out;
}

stuffle::FormalMZVSum formal_sum_from_json(const json& j) {
  stuffle::FormalMZVSum s;
  for (const json& t : j) {
    std::vector<stuffle::Token> args;
    for (const json& a : t.at("composition")) {
      if (a.is_number_integer())
        args.push_back(stuffle::Token::number(Rational(a.get<long long>())));
      else
        args.push_back(stuffle::Token::parse(a.get<std::string>()));
    }
    s.add_term(stuffle::Composition(std::move(args)), parse_rational(t.at("coeff").get<std::string>()));
  }
  return s;
}

json to_json(const numerics::EvalResult& r, const PrecisionContext& ctx) {
  json out{{"value", format(r.value, ctx)}, {"error_estimate", format(r.error_estimate, ctx)}};
  if (const auto* m = std::get_if<std::uint64_t>(&r.truncation))
    out["truncation"] = *m;
  else
    out["truncation"] = format(std::get<RealX>(r.truncation), ctx);
  return out;
}

numerics::EvalResult eval_result_from_json(const json& j, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  numerics::EvalResult r;
  r.value = parse_real(j.at("value").get<std::string>());
  r.error_estimate = parse_real(j.at("error_estimate").get<std::string>());
  const json& t = j.at("truncation");
  if (t.is_number_unsigned())
    r.truncation = t.get<std::uint64_t>();
  else
    r.truncation = parse_real(t.get<std::string>());
  return r;
}

}  // namespace mzv::json_io
