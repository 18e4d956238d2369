#include "mzv/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mzv/errors.hpp"
#include "mzv/exactalg.hpp"
#include "mzv/quadrature.hpp"

namespace mzv::numerics {

namespace detail {

const Rational& bernoulli_2r(int r) {
  constexpr int kMaxIndex = 240;
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b(kMaxIndex + 1);
    b[0] = 1;
    for (int m = 1; m <= kMaxIndex; ++m) {
      Rational acc = 0;
      BigInt binom = 1;  // C(m+1, k)
      for (int k = 0; k < m; ++k) {
        acc += Rational(binom) * b[static_cast<std::size_t>(k)];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
    }
    return b;
  }();
  if (r < 1 || 2 * r > kMaxIndex) throw std::out_of_range("Bernoulli index out of table range");
  return table[static_cast<std::size_t>(2 * r)];
}

namespace {

RealX tolerance_for(const RealX& scale) {
  const RealX eps = pow(RealX(10), -static_cast<int>(RealX::default_precision()));
  return eps * std::max(RealX(1), RealX(abs(scale)));
}

// sum_r B_{2r}/(2r)! (s)_{2r-1} x^{-s-2r+1}, stopped at the working
// tolerance or where the asymptotic series starts to grow.
RealX em_correction(const RealX& s, const RealX& x, const RealX& scale) {
  const RealX tol = tolerance_for(scale);
  const RealX inv_x2 = 1 / (x * x);
  RealX rising = s;                 // (s)_{2r-1}
  RealX xpow = pow(x, -s - 1);      // x^{-s-2r+1}
  RealX fact = 2;                   // (2r)!
  RealX total = 0;
  RealX previous = -1;
  for (int r = 1; 2 * r <= 240; ++r) {
    if (r > 1) {
      rising *= (s + (2 * r - 3)) * (s + (2 * r - 2));
      xpow *= inv_x2;
      fact *= RealX((2 * r - 1) * (2 * r));
    }
    RealX term = to_real(bernoulli_2r(r)) / fact * rising * xpow;
    RealX mag = abs(term);
    if (previous >= 0 && mag > previous) break;
    total += term;
    if (mag < tol) break;
    previous = mag;
  }
  return total;
}

}  // namespace

RealX em_segment(const RealX& s, const RealX& M, const RealX& N) {
  RealX integral = (s == 1) ? RealX(log(N / M)) : RealX((pow(N, 1 - s) - pow(M, 1 - s)) / (1 - s));
  RealX total = integral + (pow(N, -s) - pow(M, -s)) / 2;
  return total + em_correction(s, M, total) - em_correction(s, N, total);
}

RealX hurwitz_tail(const RealX& q, const RealX& N) {
  if (q <= 1) throw DomainError("hurwitz_tail requires q > 1");
  RealX total = pow(N, 1 - q) / (q - 1) - pow(N, -q) / 2;
  return total + em_correction(q, N, total);
}

std::vector<std::vector<RealX>> power_sums(std::span<const RealX> exponents, std::span<const RealX> bounds,
                                           std::uint64_t literal_limit) {
  constexpr std::uint64_t kMinLiteral = 1000;
  std::vector<std::vector<RealX>> out(exponents.size(), std::vector<RealX>(bounds.size()));

  // Bounds reachable by literal summation, and the literal stopping point.
  std::uint64_t literal_end = 0;
  bool needs_em = false;
  for (const RealX& b : bounds) {
    if (b < 0) throw DomainError("power sum bound must be non-negative");
    if (b <= RealX(literal_limit)) literal_end = std::max(literal_end, b.convert_to<std::uint64_t>());
    else needs_em = true;
  }
  if (needs_em) literal_end = std::max(literal_end, std::min(kMinLiteral, literal_limit));

  std::multimap<std::uint64_t, std::size_t> checkpoints;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (bounds[i] <= RealX(literal_end)) checkpoints.emplace(bounds[i].convert_to<std::uint64_t>(), i);
  }

  enum class Kind { integer, half, generic };
  std::vector<Kind> kinds;
  std::vector<int> int_exp;
  int max_int = 0;
  for (const RealX& s : exponents) {
    if (s >= 1 && s <= 64 && s == floor(s)) {
      kinds.push_back(Kind::integer);
      int_exp.push_back(s.convert_to<int>());
      max_int = std::max(max_int, int_exp.back());
    } else if (s == RealX(1) / 2) {
      kinds.push_back(Kind::half);
      int_exp.push_back(0);
    } else {
      kinds.push_back(Kind::generic);
      int_exp.push_back(0);
    }
  }
  const bool any_generic = std::find(kinds.begin(), kinds.end(), Kind::generic) != kinds.end();

  std::vector<RealX> sums(exponents.size(), RealX(0));
  std::vector<RealX> inv_powers(static_cast<std::size_t>(max_int) + 1);
  auto cp = checkpoints.begin();
  while (cp != checkpoints.end() && cp->first == 0) {
    for (std::size_t e = 0; e < exponents.size(); ++e) out[e][cp->second] = 0;
    ++cp;
  }
  for (std::uint64_t j = 1; j <= literal_end; ++j) {
    const RealX rj(j);
    if (max_int > 0) {
      inv_powers[1] = 1 / rj;
      for (int k = 2; k <= max_int; ++k) inv_powers[static_cast<std::size_t>(k)] = inv_powers[static_cast<std::size_t>(k - 1)] * inv_powers[1];
    }
    RealX log_j = any_generic ? RealX(log(rj)) : RealX(0);
    for (std::size_t e = 0; e < exponents.size(); ++e) {
      switch (kinds[e]) {
        case Kind::integer: sums[e] += inv_powers[static_cast<std::size_t>(int_exp[e])]; break;
        case Kind::half: sums[e] += 1 / sqrt(rj); break;
        case Kind::generic: sums[e] += exp(-exponents[e] * log_j); break;
      }
    }
    while (cp != checkpoints.end() && cp->first == j) {
      for (std::size_t e = 0; e < exponents.size(); ++e) out[e][cp->second] = sums[e];
      ++cp;
    }
  }

  if (needs_em) {
    const RealX from(literal_end);
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      if (bounds[i] <= from) continue;
      for (std::size_t e = 0; e < exponents.size(); ++e)
        out[e][i] = sums[e] + em_segment(exponents[e], from, bounds[i]);
    }
  }
  return out;
}

}  // namespace detail

RealX harmonic(std::uint64_t m, unsigned k, const PrecisionContext& ctx) {
  if (m < 1 || k < 1) throw DomainError("harmonic requires m >= 1 and k >= 1");
  PrecisionScope scope(ctx);
  const RealX exps[] = {RealX(k)};
  const RealX bounds[] = {RealX(m)};
  return detail::power_sums(exps, bounds)[0][0];
}

RealX zeta_ref(const RealX& s_in, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const RealX s = working(s_in);
  if (s <= 1) throw DomainError("zeta_ref requires s > 1");
  const std::uint64_t n0 = ctx.working_digits + 20;
  RealX total = 0;
  for (std::uint64_t j = 1; j <= n0; ++j) total += pow(RealX(j), -s);
  return total + detail::hurwitz_tail(s, RealX(n0));
}

RealX mzv_ones_closed_form(int n, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  std::map<int, RealX> atoms{{1, constants::euler_gamma()}};
  for (int k = 2; k <= n; ++k) atoms.emplace(k, zeta_ref(RealX(k), ctx));
  return eval_zeta_polynomial(exactalg::recip_gamma_coeff(n), atoms);
}

RealX CounterweightWindow::upper(std::uint64_t m) const {
  const RealX rm(m);
  switch (kind) {
    case WindowKind::square: return rm * rm;
    case WindowKind::trivial: return rm;
    case WindowKind::multiplier: {
      RealX product = working(multiplier) * rm;
      // A product that is an integer up to rounding (s = n/(n+1)) must not
      // lose one to the floor.
      RealX nearest = round(product);
      const RealX slack = pow(RealX(10), -static_cast<int>(RealX::default_precision()) + 8) * product;
      if (abs(product - nearest) <= slack) return nearest;
      return floor(product);
    }
  }
  return rm;
}

CounterweightWindow counterweight(const RealX& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (s <= 0) throw NonPositiveArgument("s must be positive");
  CounterweightWindow w;
  w.s = working(s);
  w.r = 1;
  if (s == 1) {
    w.kind = WindowKind::square;
    w.multiplier = 0;
  } else {
    w.kind = WindowKind::multiplier;
    w.multiplier = pow(RealX(2), 1 / (1 - w.s));
  }
  return w;
}

CounterweightWindow trivial_window(const RealX& s, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (s <= 1) throw DomainError("the trivial window needs s > 1");
  CounterweightWindow w;
  w.kind = WindowKind::trivial;
  w.multiplier = 1;
  w.s = working(s);
  w.r = 1;
  return w;
}

namespace {

RealX window_value(const std::vector<RealX>& sums, std::size_t i_m, std::size_t i_m1, std::size_t i_u, bool skip_one) {
  const RealX& head = skip_one ? sums[i_m1] : sums[i_m];
  return head - (sums[i_u] - sums[i_m]);
}

}  // namespace

EvalResult zeta_line_eval(const CounterweightWindow& window, std::uint64_t m, bool skip_one,
                          const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (window.s <= 0) throw NonPositiveArgument("s must be positive");
  if (m < 2) throw DomainError("zeta_line_eval requires m >= 2");
  const std::uint64_t h = m / 2;
  const RealX exps[] = {working(window.s)};
  const RealX bounds[] = {RealX(m), RealX(m - 1), window.upper(m), RealX(h), RealX(h - 1), window.upper(h)};
  const auto sums = detail::power_sums(exps, bounds)[0];
  RealX v = window_value(sums, 0, 1, 2, skip_one);
  RealX v_half = window_value(sums, 3, 4, 5, skip_one);
  return EvalResult{v, abs(v - v_half), m};
}

EvalResult zeta_line_eval(const RealX& s, std::uint64_t m, bool skip_one, const PrecisionContext& ctx) {
  return zeta_line_eval(counterweight(s, ctx), m, skip_one, ctx);
}

EvalResult mzv_ones_limit(int n, std::uint64_t m, const PrecisionContext& ctx) {
  if (n < 1 || n > 8) throw DepthOutOfRange("mzv_ones_limit supports depth 1..8");
  if (m < 2) throw DomainError("mzv_ones_limit requires m >= 2");
  PrecisionScope scope(ctx);
  const std::uint64_t h = m / 2;
  std::vector<RealX> exps;
  for (int k = 1; k <= n; ++k) exps.emplace_back(k);
  const RealX bounds[] = {RealX(m), RealX(m) * m, RealX(h), RealX(h) * h};
  const auto sums = detail::power_sums(exps, bounds);
  const auto coeffs = exactalg::signed_diagonal_coefficients(n);
  const RealX n_fact(factorial(static_cast<unsigned>(n)));

  auto evaluate = [&](std::size_t i_m, std::size_t i_sq) {
    const RealX d = 2 * sums[0][i_m] - sums[0][i_sq];
    RealX total = 0;
    for (const auto& [lambda, c] : coeffs) {
      RealX prod(c);
      for (int part : lambda.parts()) prod *= (part == 1) ? d : sums[static_cast<std::size_t>(part - 1)][i_sq];
      total += prod;
    }
    return RealX(total / n_fact);
  };
  RealX v = evaluate(0, 1);
  RealX v_half = evaluate(2, 3);
  return EvalResult{v, abs(v - v_half), m};
}

RealX mzv_ones_literal(int n, std::uint64_t m, const PrecisionContext& ctx) {
  if (n != 2 && n != 3) throw DepthOutOfRange("the literal reference path covers depth 2 and 3 only");
  if (m < 2 || m > 200) throw DomainError("the literal reference path needs 2 <= m <= 200");
  PrecisionScope scope(ctx);
  const std::uint64_t sq = m * m;
  RealX a = 0;  // sum over [1, m]
  RealX b = 0;  // sum over (m, m^2]
  RealX h2 = 0, h3 = 0;
  for (std::uint64_t j = 1; j <= m; ++j) a += RealX(1) / j;
  for (std::uint64_t j = m + 1; j <= sq; ++j) b += RealX(1) / j;
  for (std::uint64_t j = 1; j <= sq; ++j) {
    RealX inv = RealX(1) / j;
    h2 += inv * inv;
    h3 += inv * inv * inv;
  }
  // Box sums over rectangular index ranges factor into 1-D sums.
  if (n == 2) {
    RealX bracket = a * a - 2 * b * a + b * b - h2;
    return bracket / 2;
  }
  // Boxes listed as (n3, n2, n1) ranges with the signs of the depth-3
  // formula; A = [1, m], B = (m, m^2].
  RealX boxes = a * a * a            // (A,A,A)
                - a * a * b          // (A,A,B)
                - (a * b * a - a * b * b)
                - (b * a * a - b * a * b - (b * b * a - b * b * b));
  RealX total = boxes - 3 * (a - b) * h2 + 2 * h3;
  return total / 6;
}

EvalResult mzv_numeric(std::span<const Rational> s, std::uint64_t N, const PrecisionContext& ctx) {
  if (s.empty()) throw DomainError("composition must be non-empty");
  if (s.size() > 3) throw DepthOutOfRange("mzv_numeric supports depth <= 3");
  if (s[0] < 2) throw NonConvergent("leading argument must be >= 2 for convergence");
  for (const Rational& x : s) {
    if (x < 1) throw DomainError("all arguments must be >= 1");
  }
  if (N < 10) throw DomainError("mzv_numeric requires N >= 10");
  PrecisionScope scope(ctx);

  // Asymptotic expansions sum_i c_i n^{-q_i} of the nested tails
  // T_j(n) = sum_{n_j > n} n_j^{-s_j} T_{j-1}(n_j), T_0 = 1.
  using Expansion = std::map<Rational, RealX>;
  const RealX rN(N);
  const RealX log_n = log(rN);
  const double digits = ctx.working_digits + PrecisionContext::kGuardDigits + 5;
  const Rational window(static_cast<long>(std::ceil(digits / std::log10(static_cast<double>(N)))));
  RealX dropped = 0;

  auto power_at_n = [&](const Rational& q) { return RealX(exp(-to_real(q) * log_n)); };
  auto tail_expansion = [&](const Expansion& e, const Rational& shift) {
    Expansion out;
    const Rational cap = e.begin()->first + shift - 1 + window;
    auto add = [&](const Rational& q, const RealX& c) {
      if (q > cap) {
        dropped = std::max(dropped, RealX(abs(c) * power_at_n(q)));
        return;
      }
      out[q] += c;
    };
    for (const auto& [q0, c] : e) {
      const Rational q = q0 + shift;
      const RealX qr = to_real(q);
      add(q - 1, c / (qr - 1));
      add(q, -c / 2);
      RealX rising = qr;
      RealX fact = 2;
      for (int r = 1; 2 * r <= 240; ++r) {
        if (r > 1) {
          rising *= (qr + (2 * r - 3)) * (qr + (2 * r - 2));
          fact *= RealX((2 * r - 1) * (2 * r));
        }
        const Rational q_r = q + 2 * r - 1;
        if (q_r > cap) {
          add(q_r, c * to_real(detail::bernoulli_2r(r)) / fact * rising);
          break;
        }
        add(q_r, c * to_real(detail::bernoulli_2r(r)) / fact * rising);
      }
    }
    return out;
  };

  Expansion expansion{{Rational(0), RealX(1)}};
  std::vector<RealX> prev(N + 1, RealX(1));
  std::vector<RealX> cur(N + 1);
  for (const Rational& sj : s) {
    expansion = tail_expansion(expansion, sj);
    RealX at_n = 0;
    for (const auto& [q, c] : expansion) at_n += c * power_at_n(q);
    cur[N] = at_n;
    const bool integral = denominator(sj) == 1;
    const RealX sr = to_real(sj);
    for (std::uint64_t n = N; n >= 1; --n) {
      const RealX rn(n);
      RealX weight = integral ? RealX(pow(rn, -numerator(sj).convert_to<int>())) : RealX(exp(-sr * log(rn)));
      cur[n - 1] = cur[n] + weight * prev[n];
    }
    std::swap(prev, cur);
  }
  const RealX rounding = RealX(N) * pow(RealX(10), -static_cast<int>(ctx.working_digits));
  return EvalResult{prev[0], dropped * (1 + log_n) + rounding, N};
}

RealX window_integral_constant(const RealX& s_in, const RealX& t_in, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const RealX s = working(s_in);
  const RealX t = working(t_in);
  if (s == 1) throw DomainError("the multiplier window needs s != 1");
  if (t < 1) throw DomainError("window_integral_constant needs t >= 1");
  const CounterweightWindow w = counterweight(s, ctx);
  quadrature::Integrand f;
  f.f = [&s](const RealX& x) { return RealX(pow(x, -s)); };
  return quadrature::quad(f, RealX(1), t, ctx) - quadrature::quad(f, t, w.multiplier * t, ctx);
}

RealX log_gamma_series_eval(int n, const RealX& x_in, int K, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const RealX x = working(x_in);
  if (n < 1) throw DomainError("log_gamma_series_eval requires n >= 1");
  if (x <= 0 || x > RealX(1) / 2) throw DomainError("log_gamma_series_eval requires 0 < x <= 1/2");
  if (K < 0) throw DomainError("log_gamma_series_eval requires K >= 0");
  RealX total = -log(x);
  for (int j = 2; j <= n; ++j) total -= log(RealX(j));
  RealX xk = 1;
  for (int k = 1; k <= K; ++k) {
    xk *= x;
    const RealX zk = (k == 1) ? constants::euler_gamma() : zeta_ref(RealX(k), ctx);
    RealX hk = 0;
    for (int j = 1; j <= n; ++j) hk += pow(RealX(j), -k);
    RealX inner = (k % 2 == 0) ? RealX(zk + hk) : RealX(zk - hk);
    RealX term = inner * xk / k;
    // (-1)^{(n+1)k}
    if ((static_cast<long>(n + 1) * k) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

RealX ln_via_zeta_series(int n, int K, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (n < 2) throw DomainError("ln_via_zeta_series requires integer n >= 2");
  if (K < 1) throw DomainError("ln_via_zeta_series requires K >= 1");
  const RealX rn(n);
  RealX total = 0;
  for (int k = 1; k <= K; ++k) {
    const int odd = 2 * k - 1;
    const RealX z = (k == 1) ? constants::euler_gamma() : zeta_ref(RealX(odd), ctx);
    RealX h_prev = 0;
    for (int j = 1; j <= n - 1; ++j) h_prev += pow(RealX(j), -odd);
    const RealX h_n = h_prev + pow(rn, -odd);
    RealX first = 1 / (2 * k * pow(rn, 2 * k) * pow(RealX(2), 2 * k));
    RealX second = (2 * z - h_prev - h_n) / (odd * pow(RealX(2), odd));
    total += first - second;
  }
  return total;
}

}  // namespace mzv::numerics
