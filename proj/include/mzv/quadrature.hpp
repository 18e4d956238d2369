#pragma once

#include <functional>
#include <optional>

#include "mzv/real.hpp"

namespace mzv::quadrature {

using Function = std::function<RealX(const RealX&)>;

inline constexpr int kOscillatoryCutoff = 1000;

// What quad needs to know about an integrand besides its values.
struct Integrand {
  Function f;
  // Point where f blows up like |t - p|^-order.
  std::optional<RealX> singular_point;
  double singular_order = 0;
  // Set when f(t) = cos(t) * t^-p; the part beyond a finite cutoff is then
  // taken from the asymptotic series instead of quadrature.
  std::optional<unsigned> cosine_power;
  int cutoff = kOscillatoryCutoff;
};

// Integral over [a, b]; b may be +infinity. Finite intervals use tanh-sinh,
// decaying half-lines exp-sinh, oscillatory half-lines Gauss-Legendre panels
// up to a cutoff plus the asymptotic tail. Throws NonIntegrable when the
// declared singularity lies inside [a, b] or is non-integrable at an end.
RealX quad(const Integrand& f, const RealX& a, const RealX& b, const PrecisionContext& ctx);

// Building blocks. These expect to run inside a PrecisionScope.

class GaussLegendre {
 public:
  explicit GaussLegendre(int order = 32);
  RealX integrate(const Function& f, const RealX& a, const RealX& b, int panels = 1) const;

 private:
  std::vector<RealX> nodes_;
  std::vector<RealX> weights_;
};

// Panels of width min(1, t/4) from a > 0 to b: short enough for cos and for
// a pole of f at 0.
RealX graded_panels(const GaussLegendre& rule, const Function& f, const RealX& a, const RealX& b);

RealX tanh_sinh(const Function& f, const RealX& a, const RealX& b);
RealX exp_sinh(const Function& f, const RealX& a);

// int_lo^hi f(t) dt for 0 < lo, hi computed in u = ln t, which flattens the
// 1/t and t^{x-1} behavior near 0. Oriented when lo > hi.
RealX log_substituted(const GaussLegendre& rule, const Function& f, const RealX& lo, const RealX& hi);

// int_T^inf cos(t) t^-p dt from the integration-by-parts series, summed
// until the terms drop below working precision. remainder receives the
// first omitted term.
RealX cosine_tail(unsigned p, const RealX& T, RealX* remainder = nullptr);


}  // namespace mzv::quadrature
