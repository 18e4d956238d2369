#include "suites.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "mzv/exactalg.hpp"
#include "mzv/numerics.hpp"
#include "mzv/renorm_integrals.hpp"
#include "mzv/stuffle.hpp"

namespace mzv::cli {

namespace {

using stuffle::Composition;
using stuffle::FormalMZVSum;
using stuffle::ProductSum;
using stuffle::Token;

Composition single(const Token& t) { return Composition{t}; }

ProductSum product_of(std::initializer_list<Token> tokens) {
  stuffle::ProductTerm term{Rational(1), {}};
  for (const Token& t : tokens) term.factors.push_back(single(t));
  return {term};
}

CheckRow numeric_row(std::string name, const stuffle::IdentityReport& r, const PrecisionContext& ctx) {
  return {std::move(name), format(r.lhs, ctx), format(r.rhs, ctx), format(r.difference, ctx), r.pass};
}

CheckRow exact_row(std::string name, const std::string& lhs, const std::string& rhs, bool equal) {
  return {std::move(name), lhs, rhs, equal ? "0" : "nonzero", equal};
}

std::vector<CheckRow> reflection2(const PrecisionContext& ctx) {
  std::vector<CheckRow> rows;
  const Token s1 = Token::symbol("s1"), s2 = Token::symbol("s2");
  const FormalMZVSum sym = stuffle::expand(product_of({s1, s2}));
  const FormalMZVSum sym_rhs = stuffle::euler_reflection_rhs(s1, s2);
  rows.push_back(exact_row("ζ(s1)ζ(s2) stuffle", sym.to_string(), sym_rhs.to_string(), sym == sym_rhs));
  PrecisionScope scope(ctx);
  const RealX tol("1e-8");
  for (int a : {2, 3, 4}) {
    for (int b : {2, 3, 4}) {
      const Token ta = Token::number(a), tb = Token::number(b);
      auto report = stuffle::check_identity_numeric(product_of({ta, tb}),
                                                    stuffle::as_product_sum(stuffle::euler_reflection_rhs(ta, tb)), ctx,
                                                    tol);
      rows.push_back(numeric_row("ζ(" + std::to_string(a) + ")ζ(" + std::to_string(b) + ")", report, ctx));
    }
  }
  return rows;
}

std::vector<CheckRow> reflection3(const PrecisionContext& ctx) {
  std::vector<CheckRow> rows;
  const Token s1 = Token::symbol("s1"), s2 = Token::symbol("s2"), s3 = Token::symbol("s3");
  const FormalMZVSum triple = stuffle::expand(product_of({s1, s2, s3}));
  const FormalMZVSum terms = stuffle::expand(stuffle::hoffman_reflection_terms(s1, s2, s3));
  rows.push_back(exact_row("ζ(s1)ζ(s2)ζ(s3) stuffle", triple.to_string(), terms.to_string(), triple == terms));
  const Token singles[] = {s1, s2, s3};
  const FormalMZVSum folded = stuffle::product_of_singles_expansion(singles);
  rows.push_back(exact_row("left fold of three singles", folded.to_string(), triple.to_string(), folded == triple));
  PrecisionScope scope(ctx);
  const RealX tol("1e-8");
  const Token t2 = Token::number(2), t3 = Token::number(3), t4 = Token::number(4);
  auto report =
      stuffle::check_identity_numeric(product_of({t2, t3, t4}), stuffle::hoffman_reflection_terms(t2, t3, t4), ctx, tol);
  rows.push_back(numeric_row("ζ(2)ζ(3)ζ(4)", report, ctx));
  return rows;
}

std::vector<CheckRow> renorm_ones(const PrecisionContext&) {
  std::vector<CheckRow> rows;
  const Token one = Token::number(1);
  {
    const ZetaPolynomial lhs = stuffle::renormalized_value(product_of({one, one}));
    const ZetaPolynomial rhs = stuffle::renormalized_value(stuffle::euler_reflection_rhs(one, one));
    rows.push_back(exact_row("ζ(1)² reflection", lhs.to_string(), rhs.to_string(), lhs == rhs));
  }
  {
    const ZetaPolynomial lhs = stuffle::renormalized_value(product_of({one, one, one}));
    const ZetaPolynomial rhs = stuffle::renormalized_value(stuffle::hoffman_reflection_terms(one, one, one));
    rows.push_back(exact_row("ζ(1)³ reflection", lhs.to_string(), rhs.to_string(), lhs == rhs));
  }
  for (int n = 2; n <= 6; ++n) {
    const std::vector<Token> ones(static_cast<std::size_t>(n), one);
    const auto rel = stuffle::symmetric_sum_relation(ones);
    const ZetaPolynomial lhs = stuffle::renormalized_value(rel.permutation_sum);
    const ZetaPolynomial rhs = stuffle::renormalized_value(rel.set_partition_side);
    rows.push_back(exact_row("symmetric sum at 1^" + std::to_string(n), lhs.to_string(), rhs.to_string(), lhs == rhs));
  }
  return rows;
}

std::vector<CheckRow> det_trace(const PrecisionContext&) {
  std::vector<CheckRow> rows;
  std::mt19937 rng(kDetTraceSeed);
  std::uniform_int_distribution<int> size(1, 5), entry(-5, 5);
  for (int i = 0; i < 200; ++i) {
    const int n = size(rng);
    exactalg::RationalMatrix a(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = entry(rng);
    const auto traces = exactalg::power_traces(a, n);
    const Rational lhs = exactalg::det_from_traces(traces);
    const Rational rhs = exactalg::det_bareiss(a);
    rows.push_back(exact_row("matrix " + std::to_string(i) + " (" + std::to_string(n) + "x" + std::to_string(n) + ")",
                             to_string(lhs), to_string(rhs), lhs == rhs));
  }
  return rows;
}

CheckRow close_row(std::string name, const RealX& computed, const RealX& expected, const RealX& tol,
                   const PrecisionContext& ctx) {
  const RealX diff = abs(computed - expected);
  return {std::move(name), format(computed, ctx), format(expected, ctx), format(diff, ctx), diff <= tol};
}

}  // namespace

std::vector<CheckRow> run_suite(const std::string& name, const PrecisionContext& ctx) {
  if (name == "reflection2") return reflection2(ctx);
  if (name == "reflection3") return reflection3(ctx);
  if (name == "renorm-ones") return renorm_ones(ctx);
  if (name == "det-trace") return det_trace(ctx);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CheckRow> run_repro(const PrecisionContext& ctx) {
  std::vector<CheckRow> rows;
  const char* closed[] = {"(γ² − ζ(2))/2", "(γ³ − 3γζ(2) + 2ζ(3))/6",
                          "(γ⁴ − 6γ²ζ(2) + 3ζ(2)² + 8γζ(3) − 6ζ(4))/24"};
  for (int n = 2; n <= 4; ++n) {
    const std::string got = exactalg::recip_gamma_coeff(n).to_string();
    rows.push_back(exact_row("ζ(1^" + std::to_string(n) + ") closed form", got, closed[n - 2], got == closed[n - 2]));
  }
  {
    const auto table = exactalg::signed_diagonal_coefficients(4);
    std::string got;
    for (const auto& [partition, c] : table) got += (got.empty() ? "" : " ") + partition.to_string() + ":" + c.str();
    const std::string want = "[1,1,1,1]:1 [2,1,1]:-6 [2,2]:3 [3,1]:8 [4]:-6";
    rows.push_back(exact_row("signed multinomials, n=4", got, want, got == want));
  }

  PrecisionScope scope(ctx);
  const RealX gamma = constants::euler_gamma();
  const RealX pi = constants::pi();
  const RealX half_unit("0.00005");
  {
    const auto plain = numerics::zeta_line_eval(RealX("0.5"), 15000, false, ctx);
    const auto skip = numerics::zeta_line_eval(RealX("0.5"), 15000, true, ctx);
    rows.push_back(close_row("s=1/2, m=15000", plain.value, RealX("-1.4542"), half_unit, ctx));
    rows.push_back(close_row("s=1/2, m=15000, first sum to m-1", skip.value, RealX("-1.4624"), half_unit, ctx));
    const RealX target("-1.460355");
    const bool brackets = (plain.value - target) * (skip.value - target) < 0;
    rows.push_back({"the two sums bracket ζ(1/2)", format(plain.value, ctx) + " / " + format(skip.value, ctx),
                    format(target, ctx), brackets ? "bracketed" : "not bracketed", brackets});
  }
  rows.push_back(close_row("ln 2 from zeta values, K=60", numerics::ln_via_zeta_series(2, 60, ctx), log(RealX(2)),
                           RealX("1e-15"), ctx));
  rows.push_back(close_row("ln Γ(-3/2) series, K=80", numerics::log_gamma_series_eval(2, RealX("0.5"), 80, ctx),
                           log(4 * sqrt(pi) / 3), RealX("1e-10"), ctx));

  const auto schedule = renorm::YSchedule::dyadic();
  const RealX tol("1e-8");
  const RealX e = exp(RealX(1));
  rows.push_back(close_row("Γ(0), r=1", renorm::gamma_renorm(0, schedule, 1, ctx).eval.value, -gamma, tol, ctx));
  rows.push_back(close_row("Γ(0), r=e", renorm::gamma_renorm(0, schedule, e, ctx).eval.value, 1 - gamma, tol, ctx));
  rows.push_back(close_row("ϖ(1), r=1", renorm::varpi_renorm(1, schedule, 1, ctx).eval.value, RealX(0), tol, ctx));
  rows.push_back(close_row("ϖ(1), r=2", renorm::varpi_renorm(1, schedule, 2, ctx).eval.value, log(RealX(2)), tol, ctx));
  rows.push_back(close_row("Ci(0), r=1", renorm::ci_renorm(0, schedule, 1, ctx).eval.value, gamma, tol, ctx));
  rows.push_back(close_row("Ci(0), r=e²", renorm::ci_renorm(0, schedule, e * e, ctx).eval.value, gamma - 2, tol, ctx));
  rows.push_back(close_row("Ci₂(0)", renorm::ci2_renorm(0, schedule, ctx).eval.value, -pi / 2, RealX("1e-6"), ctx));
  return rows;
}

}  // namespace mzv::cli
