#include <doctest.h>

#include <array>

#include "mzv/errors.hpp"
#include "mzv/exactalg.hpp"
#include "mzv/numerics.hpp"

using namespace mzv;
using namespace mzv::numerics;

namespace {

const PrecisionContext ctx;  // 64 digits

RealX pi() { return constants::pi(); }

}  // namespace

TEST_CASE("precision context bounds") {
  CHECK_THROWS(PrecisionContext(15));
  CHECK_THROWS(PrecisionContext(101));
  CHECK(PrecisionContext(16).working_digits == 16);
}

TEST_CASE("harmonic numbers") {
  PrecisionScope scope(ctx);
  CHECK(harmonic(1, 1, ctx) == 1);
  CHECK(harmonic(1, 5, ctx) == 1);
  CHECK(harmonic(2, 1, ctx) == RealX("1.5"));
  CHECK(abs(harmonic(100, 2, ctx) - RealX("1.634983900184892865077169498180323766683")) < RealX("1e-38"));
  CHECK(abs(harmonic(100, 1, ctx) - RealX("5.187377517639620260805117675658253157909")) < RealX("1e-38"));
}

TEST_CASE("literal sums and the Euler-Maclaurin continuation agree on the overlap band") {
  PrecisionScope scope(ctx);
  const std::array<RealX, 4> exps{RealX(1), RealX(2), RealX("0.5"), RealX("1.5")};
  const std::array<RealX, 3> bounds{RealX(5000), RealX(20000), RealX(100000)};
  const auto literal = detail::power_sums(exps, bounds);
  const auto continued = detail::power_sums(exps, bounds, 2000);
  for (std::size_t e = 0; e < exps.size(); ++e)
    for (std::size_t b = 0; b < bounds.size(); ++b)
      CHECK(abs(literal[e][b] - continued[e][b]) < RealX("1e-55") * abs(literal[e][b]));
}

TEST_CASE("zeta_ref") {
  PrecisionScope scope(ctx);
  CHECK(abs(zeta_ref(RealX(2), ctx) - pi() * pi() / 6) < RealX("1e-55"));
  CHECK(abs(zeta_ref(RealX(4), ctx) - pow(pi(), 4) / 90) < RealX("1e-55"));
  CHECK(abs(zeta_ref(RealX("1.5"), ctx) - RealX("2.6123753486854883433485675679240716305708006524001")) < RealX("1e-48"));
  CHECK_THROWS_AS(zeta_ref(RealX(1), ctx), DomainError);
}

TEST_CASE("counterweight windows") {
  PrecisionScope scope(ctx);
  const auto half = counterweight(RealX("0.5"), ctx);
  CHECK(half.kind == WindowKind::multiplier);
  CHECK(half.multiplier == 4);
  CHECK(half.upper(15000) == 60000);
  CHECK(counterweight(RealX(1), ctx).kind == WindowKind::square);
  CHECK(counterweight(RealX(1), ctx).upper(1000) == 1000000);
  const auto two_thirds = counterweight(RealX(2) / 3, ctx);
  CHECK(abs(two_thirds.multiplier - 8) < RealX("1e-60"));
  CHECK(two_thirds.upper(1234) == 9872);
  // Above 1 the same formula gives a shrinking window.
  CHECK(counterweight(RealX(2), ctx).multiplier == RealX("0.5"));
  CHECK_THROWS_AS(counterweight(RealX(0), ctx), NonPositiveArgument);
  CHECK_THROWS_WITH(counterweight(RealX(-1), ctx), "s must be positive");
  CHECK_THROWS_AS(trivial_window(RealX("0.5"), ctx), DomainError);
  CHECK(trivial_window(RealX(2), ctx).upper(77) == 77);
}

TEST_CASE("window integral constant is -1/(1-s)") {
  for (const char* s_text : {"0.5", "0.25", "2", "3"}) {
    PrecisionScope scope(ctx);
    const RealX s(s_text);
    for (int t : {2, 10, 1000}) CHECK(abs(window_integral_constant(s, RealX(t), ctx) + 1 / (1 - s)) < RealX("1e-50"));
  }
  PrecisionScope scope(ctx);
  CHECK_THROWS_AS(window_integral_constant(RealX(1), RealX(2), ctx), DomainError);
}

TEST_CASE("zeta_line_eval at s = 1/2") {
  PrecisionScope scope(ctx);
  const RealX s("0.5");
  const auto plain = zeta_line_eval(s, 15000, false, ctx);
  const auto skip = zeta_line_eval(s, 15000, true, ctx);
  CHECK(abs(plain.value - RealX("-1.4542")) < RealX("0.00005"));
  CHECK(abs(skip.value - RealX("-1.4624")) < RealX("0.00005"));
  CHECK(std::get<std::uint64_t>(plain.truncation) == 15000);
  const auto half = zeta_line_eval(s, 7500, false, ctx);
  CHECK(plain.error_estimate == abs(plain.value - half.value));
  CHECK_THROWS_AS(zeta_line_eval(RealX(-1), 100, false, ctx), NonPositiveArgument);
  CHECK_THROWS_AS(zeta_line_eval(s, 1, false, ctx), DomainError);
}

TEST_CASE("the two s = 1/2 sequences are monotone and bracket zeta(1/2)") {
  PrecisionScope scope(ctx);
  const RealX s("0.5"), target("-1.460355");
  RealX prev_plain = 0, prev_skip = -10;
  bool first = true;
  for (std::uint64_t m : {1000, 2000, 4000, 8000, 15000}) {
    const RealX plain = zeta_line_eval(s, m, false, ctx).value;
    const RealX skip = zeta_line_eval(s, m, true, ctx).value;
    CHECK(plain > target);
    CHECK(skip < target);
    if (!first) {
      CHECK(plain < prev_plain);
      CHECK(skip > prev_skip);
    }
    prev_plain = plain;
    prev_skip = skip;
    first = false;
  }
}

TEST_CASE("zeta_line_eval at s = 1 approaches gamma") {
  PrecisionScope scope(ctx);
  const auto r = zeta_line_eval(RealX(1), 1000000, false, ctx);
  CHECK(abs(r.value - constants::euler_gamma()) < RealX("1e-5"));
}

TEST_CASE("zeta_line_eval agrees with zeta at convergent points") {
  PrecisionScope scope(ctx);
  for (const char* s_text : {"1.5", "2", "3"}) {
    const RealX s(s_text);
    const RealX z = zeta_ref(s, ctx);
    const RealX d3 = abs(zeta_line_eval(s, 1000, false, ctx).value - z);
    const RealX d4 = abs(zeta_line_eval(s, 10000, false, ctx).value - z);
    CHECK(d4 < d3);
    CHECK(d4 < RealX("0.01"));
    const auto trivial = zeta_line_eval(trivial_window(s, ctx), 10000, false, ctx);
    // Plain partial sums leave a tail of about m^{1-s}/(s-1).
    CHECK(abs(trivial.value - z) < RealX("1.01") * pow(RealX(10000), 1 - s) / (s - 1));
  }
}

TEST_CASE("mzv_ones_limit examples") {
  PrecisionScope scope(ctx);
  CHECK(abs(mzv_ones_limit(1, 10000, ctx).value - constants::euler_gamma()) < RealX("2e-4"));
  const auto two = mzv_ones_limit(2, 10000, ctx);
  CHECK(abs(two.value - RealX("-0.65588")) < RealX("1e-3"));
  CHECK(abs(mzv_ones_closed_form(2, ctx) - RealX("-0.6558780715202538810770195151453904812798")) < RealX("1e-38"));
  CHECK(abs(mzv_ones_limit(4, 1000, ctx).value - mzv_ones_closed_form(4, ctx)) < RealX("5e-3"));
  CHECK_THROWS_AS(mzv_ones_limit(9, 100, ctx), DepthOutOfRange);
  CHECK_THROWS_AS(mzv_ones_limit(0, 100, ctx), DepthOutOfRange);
}

TEST_CASE("mzv_ones_limit converges like 1/m") {
  PrecisionScope scope(ctx);
  for (int n = 1; n <= 5; ++n) {
    const RealX target = mzv_ones_closed_form(n, ctx);
    RealX previous = 1;
    for (std::uint64_t m : {100, 200, 400, 800, 1600, 10000}) {
      const RealX err = abs(mzv_ones_limit(n, m, ctx).value - target);
      CHECK(err < previous);
      CHECK(err * m < 10);
      previous = err;
    }
  }
}

TEST_CASE("factorized all-ones limit matches the literal box sums") {
  PrecisionScope scope(ctx);
  for (int n : {2, 3}) {
    for (std::uint64_t m : {2, 3, 7, 50, 200}) {
      const RealX literal = mzv_ones_literal(n, m, ctx);
      CHECK(abs(literal - mzv_ones_limit(n, m, ctx).value) < RealX("1e-55"));
    }
  }
  CHECK_THROWS(mzv_ones_literal(4, 10, ctx));
  CHECK_THROWS(mzv_ones_literal(2, 201, ctx));
}

TEST_CASE("mzv_numeric") {
  PrecisionScope scope(ctx);
  const RealX pi4 = pow(pi(), 4);
  const std::vector<Rational> s21{2, 1}, s22{2, 2}, s4{4}, s31{3, 1}, s211{2, 1, 1};
  const auto z21 = mzv_numeric(s21, 100000, ctx);
  CHECK(abs(z21.value - zeta_ref(RealX(3), ctx)) < RealX("1e-8"));
  CHECK(abs(mzv_numeric(s22, 100000, ctx).value - pi4 / 120) < RealX("1e-8"));
  CHECK(abs(mzv_numeric(s4, 1000, ctx).value - pi4 / 90) < RealX("1e-20"));
  // Tail handling makes modest N accurate far beyond 1/N.
  const std::vector<std::pair<std::vector<Rational>, RealX>> cases{
      {s21, zeta_ref(RealX(3), ctx)}, {s31, RealX(pi4 / 360)}, {s211, RealX(pi4 / 90)}, {s22, RealX(pi4 / 120)}};
  for (const auto& [s, exact] : cases) {
    const auto r = mzv_numeric(s, 2000, ctx);
    CHECK(abs(r.value - exact) < RealX("1e-40"));
    CHECK(abs(r.value - exact) <= r.error_estimate);
  }
  CHECK_THROWS_AS(mzv_numeric(std::vector<Rational>{1, 2}, 1000, ctx), NonConvergent);
  CHECK_THROWS_AS(mzv_numeric(std::vector<Rational>{2, 1, 1, 1}, 1000, ctx), DepthOutOfRange);
  CHECK_THROWS_AS(mzv_numeric(std::vector<Rational>{2, Rational(1, 2)}, 1000, ctx), DomainError);
}

TEST_CASE("mzv_numeric with rational arguments is stable in N") {
  PrecisionScope scope(ctx);
  const std::vector<Rational> s{Rational(5, 2), Rational(3, 2)};
  const RealX a = mzv_numeric(s, 1000, ctx).value;
  const RealX b = mzv_numeric(s, 4000, ctx).value;
  CHECK(abs(a - b) < RealX("1e-30"));
}

TEST_CASE("log Gamma series") {
  PrecisionScope scope(ctx);
  CHECK(abs(log_gamma_series_eval(1, RealX("0.25"), 80, ctx) -
            RealX("1.3664317612369762345496021244689483325360664981551")) < RealX("1e-15"));
  CHECK(abs(log_gamma_series_eval(2, RealX("0.5"), 80, ctx) - log(4 * sqrt(pi()) / 3)) < RealX("1e-10"));
  CHECK(abs(log_gamma_series_eval(3, RealX("0.25"), 0, ctx) - (-log(RealX("0.25")) - log(RealX(6)))) < RealX("1e-60"));
  CHECK_THROWS_AS(log_gamma_series_eval(1, RealX("0.6"), 10, ctx), DomainError);
  CHECK_THROWS_AS(log_gamma_series_eval(0, RealX("0.5"), 10, ctx), DomainError);
}

TEST_CASE("ln n from zeta values") {
  PrecisionScope scope(ctx);
  CHECK(abs(ln_via_zeta_series(2, 60, ctx) - log(RealX(2))) < RealX("1e-15"));
  CHECK(abs(ln_via_zeta_series(4, 60, ctx) - log(RealX(4))) < RealX("1e-12"));
  // The one-term partial sum is 41/32 - gamma, which overshoots ln 2.
  const RealX first = ln_via_zeta_series(2, 1, ctx);
  CHECK(abs(first - (RealX(41) / 32 - constants::euler_gamma())) < RealX("1e-60"));
  CHECK(first > 0);
  CHECK(first != log(RealX(2)));
  CHECK_THROWS_AS(ln_via_zeta_series(1, 10, ctx), DomainError);
  CHECK_THROWS_AS(ln_via_zeta_series(2, 0, ctx), DomainError);
}

TEST_CASE("results agree across precisions") {
  const PrecisionContext low(64), high(96);
  RealX a, b;
  {
    PrecisionScope scope(low);
    a = mzv_ones_limit(3, 500, low).value;
  }
  {
    PrecisionScope scope(high);
    b = mzv_ones_limit(3, 500, high).value;
  }
  PrecisionScope scope(high);
  CHECK(abs(a - b) < RealX("1e-60"));
}
