#include "mzv/renorm_integrals.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>

#include "mzv/errors.hpp"
#include "mzv/quadrature.hpp"

namespace mzv::renorm {

using quadrature::Function;
using quadrature::GaussLegendre;
using quadrature::log_substituted;

WindowSpec::WindowSpec(NearEdge edge, RealX r_value) : near_edge(edge), r(std::move(r_value)) {
  if (!(r > 0)) throw NonPositiveArgument("r must be positive");
}

RealX WindowSpec::lower(const RealX& y) const {
  return near_edge == NearEdge::quadratic ? RealX(r * y * y) : RealX(y / 2);
}

YSchedule::YSchedule(std::vector<RealX> values) : values_(std::move(values)) {
  if (values_.size() < 3) throw DomainError("schedule needs at least 3 points");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0 && values_[i] < 1)) throw DomainError("schedule values must lie in (0, 1)");
    if (i > 0 && !(values_[i] < values_[i - 1])) throw DomainError("schedule must be strictly decreasing");
  }
  const RealX q = values_[0] / values_[1];
  for (std::size_t i = 1; i + 1 < values_.size(); ++i) {
    const RealX qi = values_[i] / values_[i + 1];
    if (abs(qi - q) > q * RealX("1e-12")) throw DomainError("schedule must be geometric");
  }
}

YSchedule YSchedule::dyadic(int first, int last) {
  if (first < 1 || last < first + 2) throw DomainError("dyadic schedule needs 1 <= first and last >= first + 2");
  std::vector<RealX> v;
  for (int j = first; j <= last; ++j) v.push_back(ldexp(RealX(1), -j));
  return YSchedule(std::move(v));
}

YSchedule YSchedule::from_values(std::vector<RealX> values) { return YSchedule(std::move(values)); }

RealX YSchedule::ratio() const { return values_[0] / values_[1]; }

namespace {

// Nearest k/d with d <= 12 when p approaches it: the last estimate is within
// 10 times the last change of it, and within 0.01.
std::optional<RealX> snap_power(const RealX& p, const RealX& previous) {
  const RealX reach = std::min(RealX("0.01"), RealX(10 * abs(p - previous) + RealX("1e-12")));
  std::optional<RealX> best;
  for (int d = 1; d <= 12; ++d) {
    const RealX candidate = RealX(round(p * d)) / d;
    if (candidate > 0 && abs(candidate - p) <= reach && (!best || abs(candidate - p) < abs(*best - p))) best = candidate;
  }
  return best;
}

}  // namespace

constexpr int kMaxLevels = 8;

Extrapolation richardson(std::span<const RealX> ys, std::span<const RealX> values, const RealX& noise) {
  if (ys.size() != values.size() || ys.size() < 2) throw LengthMismatch("richardson needs matching series");
  const RealX q = ys[0] / ys[1];
  const RealX log_q = log(q);
  std::vector<RealX> seq(values.begin(), values.end());
  Extrapolation out;
  // Power read from the ratio of the differences ending at index i.
  auto power_at = [&](std::size_t i) -> std::optional<RealX> {
    const RealX d1 = seq[i - 1] - seq[i - 2];
    const RealX d2 = seq[i] - seq[i - 1];
    if (abs(d2) <= noise || d1 == 0 || (d1 > 0) != (d2 > 0)) return std::nullopt;
    const RealX rho = d1 / d2;
    if (rho <= RealX("1.000001")) return std::nullopt;
    return RealX(log(rho) / log_q);
  };
  RealX last_change = 0;
  for (int level = 0; level < kMaxLevels; ++level) {
    const std::size_t n = seq.size();
    if (n < 4) break;
    const auto p_last = power_at(n - 1);
    const auto p_prev = power_at(n - 2);
    if (!p_last || !p_prev) break;
    // Eliminating with the power read off the final triple would force the
    // last two extrapolants to coincide, so fall back to the previous one;
    // past the first level an unsettled power does more harm than good.
    const auto snapped = snap_power(*p_last, *p_prev);
    if (!snapped && level > 0) break;
    const RealX p = snapped.value_or(*p_prev);
    const RealX factor = pow(q, p) - 1;
    std::vector<RealX> next(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) next[i] = seq[i + 1] + (seq[i + 1] - seq[i]) / factor;
    out.powers.push_back(p);
    last_change = abs(next.back() - seq.back());
    seq = std::move(next);
  }
  const std::size_t n = seq.size();
  out.value = seq.back();
  out.error = std::max({RealX(abs(seq[n - 1] - seq[n - 2])), last_change, noise});
  return out;
}

namespace {

// Evaluates raw(y) = main(y) + sign * window(y) over the schedule and
// extrapolates to y = 0.
RenormResult drive(const YSchedule& schedule, const std::function<RealX(const RealX&)>& main,
                   const std::function<RealX(const RealX&)>& window, int sign, const RealX& extra_error,
                   const PrecisionContext& ctx) {
  RenormResult result;
  std::vector<RealX> ys, raws;
  for (const RealX& y_in : schedule.values()) {
    const RealX y = working(y_in);
    const RealX w = window(y);
    const RealX raw = main(y) + sign * w;
    result.rows.push_back({y, raw, w});
    ys.push_back(y);
    raws.push_back(raw);
  }
  const RealX scale = std::max(RealX(1), RealX(abs(raws.back())));
  const RealX noise = pow(RealX(10), -static_cast<int>(ctx.working_digits) + 5) * scale;
  Extrapolation ex = richardson(ys, raws, noise);
  result.detected_powers = std::move(ex.powers);
  result.eval = EvalResult{ex.value, ex.error + extra_error, ys.back()};
  return result;
}

void require_positive_r(const RealX& r) {
  if (!(r > 0)) throw NonPositiveArgument("r must be positive");
}

}  // namespace

RenormResult gamma_renorm(const RealX& x_in, const YSchedule& schedule, const RealX& r_in,
                          const PrecisionContext& ctx) {
  if (x_in < 0) throw DomainError("gamma_renorm needs x >= 0");
  require_positive_r(r_in);
  PrecisionScope scope(ctx);
  const RealX x = working(x_in);
  const WindowSpec spec(NearEdge::quadratic, working(r_in));
  const GaussLegendre rule;
  const Function g = [&](const RealX& t) { return RealX(pow(t, x - 1) * exp(-t)); };
  const RealX upper = quadrature::exp_sinh(g, RealX(1));
  return drive(
      schedule, [&](const RealX& y) { return RealX(log_substituted(rule, g, y, RealX(1)) + upper); },
      [&](const RealX& y) { return log_substituted(rule, g, spec.lower(y), y); }, -1, RealX(0), ctx);
}

RenormResult varpi_renorm(const RealX& x_in, const YSchedule& schedule, const RealX& r_in,
                          const PrecisionContext& ctx) {
  if (x_in < 1) throw DomainError("varpi_renorm needs x >= 1");
  require_positive_r(r_in);
  PrecisionScope scope(ctx);
  const RealX inv_x = 1 / working(x_in);
  const WindowSpec spec(NearEdge::quadratic, working(r_in));
  const GaussLegendre rule;
  const Function h = [&](const RealX& w) { return RealX(pow(1 / tan(w), inv_x)); };
  const RealX upper = quadrature::tanh_sinh(h, RealX(1), constants::pi() / 2);
  return drive(
      schedule, [&](const RealX& y) { return RealX(log_substituted(rule, h, y, RealX(1)) + upper); },
      [&](const RealX& y) { return log_substituted(rule, h, spec.lower(y), y); }, -1, RealX(0), ctx);
}

namespace {

// Shared body of the two cosine integrals: k(t) = cos t / t^p. The part
// of int_{x+y}^inf beyond x + 1 does not depend on y and is computed once.
RenormResult cosine_renorm(unsigned p, const RealX& x_in, const YSchedule& schedule, const WindowSpec& spec,
                           int main_sign, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const RealX x = working(x_in);
  const GaussLegendre rule;
  const Function k = [p](const RealX& t) { return RealX(cos(t) / pow(t, p)); };
  const RealX anchor = x + 1;
  const RealX cutoff = std::max(anchor, RealX(quadrature::kOscillatoryCutoff));
  RealX tail_remainder = 0;
  RealX far = quadrature::cosine_tail(p, cutoff, &tail_remainder);
  if (cutoff > anchor) far += quadrature::graded_panels(rule, k, anchor, cutoff);
  auto near = [&](const RealX& lo, const RealX& hi) { return log_substituted(rule, k, lo, hi); };
  return drive(
      schedule, [&](const RealX& y) { return RealX(main_sign * (near(x + y, anchor) + far)); },
      [&](const RealX& y) { return near(x + spec.lower(y), x + y); }, -main_sign, tail_remainder, ctx);
}

}  // namespace

RenormResult ci_renorm(const RealX& x, const YSchedule& schedule, const RealX& r, const PrecisionContext& ctx) {
  if (x < 0) throw DomainError("ci_renorm needs x >= 0");
  require_positive_r(r);
  PrecisionScope scope(ctx);
  return cosine_renorm(1, x, schedule, WindowSpec(NearEdge::quadratic, working(r)), -1, ctx);
}

RenormResult ci2_renorm(const RealX& x, const YSchedule& schedule, const PrecisionContext& ctx) {
  if (x < 0) throw DomainError("ci2_renorm needs x >= 0");
  return cosine_renorm(2, x, schedule, WindowSpec(NearEdge::linear_half, RealX(1)), 1, ctx);
}

}  // namespace mzv::renorm
