#include "mzv/quadrature.hpp"

#include <boost/math/special_functions/fpclassify.hpp>

#include "mzv/errors.hpp"

namespace mzv::quadrature {

namespace {

int working_digits() { return static_cast<int>(RealX::default_precision()); }

RealX tolerance() { return pow(RealX(10), -(working_digits() - 2)); }

bool usable(const RealX& v) { return boost::math::isfinite(v); }

}  // namespace

GaussLegendre::GaussLegendre(int order) : nodes_(static_cast<std::size_t>(order)), weights_(static_cast<std::size_t>(order)) {
  const RealX pi = constants::pi();
  const RealX tol = pow(RealX(10), -working_digits());
  for (int i = 0; i < order; ++i) {
    RealX x = cos(pi * (i + RealX(3) / 4) / (order + RealX(1) / 2));
    RealX dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      RealX p0 = 1, p1 = x;
      for (int k = 2; k <= order; ++k) {
        RealX p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1);
      RealX step = p1 / dp;
      x -= step;
      if (abs(step) < tol) break;
    }
    nodes_[static_cast<std::size_t>(i)] = x;
    weights_[static_cast<std::size_t>(i)] = 2 / ((1 - x * x) * dp * dp);
  }
}

RealX GaussLegendre::integrate(const Function& f, const RealX& a, const RealX& b, int panels) const {
  RealX total = 0;
  const RealX width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const RealX lo = a + width * p;
    const RealX half = width / 2;
    const RealX mid = lo + half;
    RealX s = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) s += weights_[i] * f(mid + half * nodes_[i]);
    total += s * half;
  }
  return total;
}

RealX graded_panels(const GaussLegendre& rule, const Function& f, const RealX& a, const RealX& b) {
  if (!(a > 0)) throw DomainError("graded panels need a > 0");
  RealX total = 0;
  RealX t = a;
  while (t < b) {
    const RealX next = std::min(RealX(b), RealX(t + std::min(RealX(1), RealX(t / 4))));
    total += rule.integrate(f, t, next);
    t = next;
  }
  return total;
}

RealX tanh_sinh(const Function& f, const RealX& a, const RealX& b) {
  if (a == b) return 0;
  if (a > b) return -tanh_sinh(f, b, a);
  const RealX pi = constants::pi();
  const RealX half_pi = pi / 2;
  const RealX half_len = (b - a) / 2;
  // Reaches within 10^{-4(d+15)} of the ends, enough for |t - end|^{-3/4}.
  const RealX t_max = asinh(4 * (working_digits() + 15) * log(RealX(10)) / pi);
  const RealX tol = tolerance();

  // Weighted sample at t, with the abscissa measured from the nearer end.
  auto sample = [&](const RealX& t) -> RealX {
    const RealX u = half_pi * sinh(t);
    const RealX ch = cosh(u);
    const RealX w = half_pi * cosh(t) / (ch * ch) * half_len;
    if (w == 0) return 0;
    RealX x;
    if (t < 0) {
      const RealX d = 2 * half_len / (1 + exp(-2 * u));
      if (d == 0) return 0;
      x = a + d;
      if (x <= a) return 0;
    } else {
      const RealX d = 2 * half_len / (1 + exp(2 * u));
      if (d == 0) return 0;
      x = b - d;
      if (x >= b) return 0;
    }
    RealX v = f(x);
    if (!usable(v)) return 0;
    return w * v;
  };

  RealX h = 1;
  RealX sum = sample(RealX(0));
  for (RealX t = h; t <= t_max; t += h) sum += sample(t) + sample(-t);
  RealX estimate = sum * h;
  for (int level = 1; level <= 12; ++level) {
    h /= 2;
    RealX added = 0;
    for (RealX t = h; t <= t_max; t += 2 * h) added += sample(t) + sample(-t);
    sum += added;
    RealX next = sum * h;
    RealX diff = abs(next - estimate);
    estimate = next;
    if (level >= 3 && diff <= tol * std::max(RealX(1), RealX(abs(estimate)))) break;
  }
  return estimate;
}

RealX exp_sinh(const Function& f, const RealX& a) {
  const RealX pi = constants::pi();
  const RealX half_pi = pi / 2;
  const RealX t_low = asinh((working_digits() + 15) * log(RealX(10)) * 2 / pi);
  // Reaches 10^{2(d+15)}, enough for algebraic decay like t^-3/2.
  const RealX t_high = asinh(4 * (working_digits() + 15) * log(RealX(10)) / pi);
  const RealX tol = tolerance();

  auto sample = [&](const RealX& t) -> RealX {
    const RealX e = exp(half_pi * sinh(t));
    const RealX w = half_pi * cosh(t) * e;
    RealX v = f(a + e);
    if (!usable(v)) return 0;
    return w * v;
  };

  RealX h = RealX(1) / 2;
  RealX sum = 0;
  for (RealX t = -t_low; t <= t_high; t += h) sum += sample(t);
  RealX estimate = sum * h;
  for (int level = 1; level <= 12; ++level) {
    h /= 2;
    RealX added = 0;
    for (RealX t = -t_low + h; t <= t_high; t += 2 * h) added += sample(t);
    sum += added;
    RealX next = sum * h;
    RealX diff = abs(next - estimate);
    estimate = next;
    if (level >= 3 && diff <= tol * std::max(RealX(1), RealX(abs(estimate)))) break;
  }
  return estimate;
}

RealX log_substituted(const GaussLegendre& rule, const Function& f, const RealX& lo, const RealX& hi) {
  if (lo <= 0 || hi <= 0) throw DomainError("log_substituted needs positive bounds");
  const RealX u_lo = log(lo);
  const RealX u_hi = log(hi);
  const RealX span = abs(u_hi - u_lo);
  const int panels = std::max(1, static_cast<int>(ceil(span * 2).convert_to<long>()));
  auto g = [&](const RealX& u) {
    const RealX t = exp(u);
    return RealX(f(t) * t);
  };
  return rule.integrate(g, u_lo, u_hi, panels);
}

RealX cosine_tail(unsigned p, const RealX& T, RealX* remainder) {
  const RealX half_pi = constants::pi() / 2;
  const RealX tol = pow(RealX(10), -working_digits()) * pow(T, -RealX(p));
  RealX total = 0;
  RealX magnitude = pow(T, -RealX(p));  // (p)_k T^{-p-k}
  RealX previous = magnitude * 2;
  for (unsigned k = 0; k < 4000; ++k) {
    if (magnitude < tol || magnitude > previous) {
      if (remainder) *remainder = magnitude;
      return total;
    }
    RealX term = magnitude * cos(T + (k + 1) * half_pi);
    total += (k % 2 == 0) ? term : RealX(-term);
    previous = magnitude;
    magnitude *= RealX(p + k) / T;
  }
  if (remainder) *remainder = magnitude;
  return total;
}

RealX quad(const Integrand& f, const RealX& a_in, const RealX& b_in, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const RealX a = working(a_in);
  const RealX b = working(b_in);
  const bool infinite = boost::math::isinf(b) && b > 0;
  if (!infinite && b < a) return -quad(f, b, a, ctx);
  if (!infinite && a == b) return 0;
  if (f.singular_point) {
    const RealX& s = *f.singular_point;
    const bool inside = s > a && (infinite || s < b);
    const bool at_end = s == a || (!infinite && s == b);
    if (inside || (at_end && f.singular_order >= 1))
      throw NonIntegrable("integrand singularity lies in the integration range");
  }
  if (!infinite) return tanh_sinh(f.f, a, b);
  if (!f.cosine_power) return exp_sinh(f.f, a);

  const RealX cutoff = std::max(a, RealX(f.cutoff));
  RealX total = 0;
  if (cutoff > a) total = graded_panels(GaussLegendre(), f.f, a, cutoff);
  return total + cosine_tail(*f.cosine_power, cutoff);
}

}  // namespace mzv::quadrature
