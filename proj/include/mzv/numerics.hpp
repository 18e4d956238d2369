#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "mzv/rational.hpp"
#include "mzv/real.hpp"

namespace mzv::numerics {

// A numeric value with an empirical error estimate and the truncation
// parameter (m, N, or the smallest y) that produced it. The estimate is a
// target checked in tests, not a certified bound.
struct EvalResult {
  using Truncation = std::variant<std::uint64_t, RealX>;

  RealX value;
  RealX error_estimate;
  Truncation truncation;
};

// H_m^{(k)} = sum_{j=1..m} j^-k. Literal ascending summation while the bound
// is at most kLiteralLimit terms, Euler-Maclaurin continuation beyond.
RealX harmonic(std::uint64_t m, unsigned k, const PrecisionContext& ctx);

// Reference zeta(s) for real s > 1 by Euler-Maclaurin tail correction.
RealX zeta_ref(const RealX& s, const PrecisionContext& ctx);

// Closed-form target for the renormalized zeta(1,...,1) with n ones:
// recip_gamma_coeff(n) evaluated at gamma and zeta_ref(k).
RealX mzv_ones_closed_form(int n, const PrecisionContext& ctx);

enum class WindowKind { multiplier, square, trivial };

// The subtracted range (m, f(m)] of the limit definition of zeta(s).
struct CounterweightWindow {
  WindowKind kind = WindowKind::square;
  RealX multiplier;  // 2^{1/(1-s)} for kind == multiplier
  RealX s;
  RealX r = 1;

  // floor(f(m)) as an integer-valued real.
  RealX upper(std::uint64_t m) const;
};

// s in (0,1) and s > 1: multiplier 2^{1/(1-s)}; s == 1: square window m -> m^2.
// Throws NonPositiveArgument for s <= 0.
CounterweightWindow counterweight(const RealX& s, const PrecisionContext& ctx);

// The trivial window f(m) = m (plain partial sum), valid for s > 1 only.
CounterweightWindow trivial_window(const RealX& s, const PrecisionContext& ctx);

// sum_{n<=m} n^-s - sum_{m<k<=floor f(m)} k^-s. When f(m) < m the second sum
// is oriented (it adds back the terms in (f(m), m]). With skip_one the first
// sum stops at m-1. error_estimate = |value(m) - value(m/2)|.
EvalResult zeta_line_eval(const RealX& s, std::uint64_t m, bool skip_one, const PrecisionContext& ctx);
EvalResult zeta_line_eval(const CounterweightWindow& window, std::uint64_t m, bool skip_one,
                          const PrecisionContext& ctx);

// Depth-n all-ones limit at truncation m via the partition form
// (1/n!) sum_lambda c(lambda) prod(part 1 -> D(m), part k -> H_{m^2}^{(k)}),
// D(m) = sum_{j<=m} 1/j - sum_{m<j<=m^2} 1/j. Requires 1 <= n <= 8, m >= 2.
EvalResult mzv_ones_limit(int n, std::uint64_t m, const PrecisionContext& ctx);

// Slow path: the box-by-box expansion of the depth-2 and depth-3 limit
// formulas with literal sums, for n in {2,3} and 2 <= m <= 200.
RealX mzv_ones_literal(int n, std::uint64_t m, const PrecisionContext& ctx);

// zeta(s_1,...,s_k) = sum_{n_1 > ... > n_k >= 1} prod n_i^{-s_i}, s_1 on the
// largest index. Requires s_1 >= 2, all s_i >= 1, depth <= 3, N >= 10.
// Throws NonConvergent if s_1 < 2.
EvalResult mzv_numeric(std::span<const Rational> s, std::uint64_t N, const PrecisionContext& ctx);

// int_1^t x^-s dx - int_t^{f(t)} x^-s dx for the multiplier window of
// counterweight(s), s != 1, by quadrature. The result does not depend on t.
RealX window_integral_constant(const RealX& s, const RealX& t, const PrecisionContext& ctx);

// Partial sum with K terms of the series for ln Gamma(-n + (-1)^n x),
// 0 < x <= 1/2, zeta(1) := gamma. K == 0 gives -ln x - ln n!.
RealX log_gamma_series_eval(int n, const RealX& x, int K, const PrecisionContext& ctx);

// Partial sum with K terms of the zeta-value series for ln n (integer n >= 2),
// with zeta(1) := gamma in the first term.
RealX ln_via_zeta_series(int n, int K, const PrecisionContext& ctx);

namespace detail {

inline constexpr std::uint64_t kLiteralLimit = 10'000'000;

// B_{2r} for r >= 1 (exact).
const Rational& bernoulli_2r(int r);

// sum_{j=M+1..N} j^-s by Euler-Maclaurin (M >= 1000 recommended).
RealX em_segment(const RealX& s, const RealX& M, const RealX& N);

// sum_{n>N} n^-q for q > 1.
RealX hurwitz_tail(const RealX& q, const RealX& N);

// Partial sums sum_{j=1..b} j^-s for each bound b (integer-valued, any
// order) and each exponent. Result is indexed [exponent][bound].
std::vector<std::vector<RealX>> power_sums(std::span<const RealX> exponents, std::span<const RealX> bounds,
                                           std::uint64_t literal_limit = kLiteralLimit);

}  // namespace detail

}  // namespace mzv::numerics
