#pragma once

#include <span>
#include <vector>

#include "mzv/numerics.hpp"
#include "mzv/real.hpp"

namespace mzv::renorm {

using numerics::EvalResult;

enum class NearEdge { quadratic, linear_half };

// Shape of the subtracted interval next to the singular point:
// quadratic -> [x + r y^2, x + y], linear_half -> [x + y/2, x + y].
struct WindowSpec {
  NearEdge near_edge = NearEdge::quadratic;
  RealX r = 1;

  WindowSpec() = default;
  WindowSpec(NearEdge edge, RealX r_value);

  RealX lower(const RealX& y) const;
};

// Strictly decreasing, geometric sequence of y in (0, 1).
class YSchedule {
 public:
  // y_j = 2^-j for j = first..last.
  static YSchedule dyadic(int first = 4, int last = 24);
  static YSchedule from_values(std::vector<RealX> values);

  const std::vector<RealX>& values() const { return values_; }
  RealX ratio() const;

 private:
  explicit YSchedule(std::vector<RealX> values);
  std::vector<RealX> values_;
};

struct ScheduleRow {
  RealX y;
  RealX raw;     // main integral combined with the window at this y
  RealX window;  // the subtracted window integral alone
};

struct RenormResult {
  EvalResult eval;  // truncation holds the smallest y
  std::vector<ScheduleRow> rows;
  std::vector<RealX> detected_powers;  // leading y-powers eliminated, in order
};

// int_y^inf t^{x-1} e^{-t} dt - int_{r y^2}^y t^{x-1} e^{-t} dt as y -> 0.
RenormResult gamma_renorm(const RealX& x, const YSchedule& schedule, const RealX& r, const PrecisionContext& ctx);

// int_y^{pi/2} cot(w)^{1/x} dw - int_{r y^2}^y cot(w)^{1/x} dw as y -> 0; this
// is the tan-form integral over [0, pi/2 - y] minus [pi/2 - y, pi/2 - r y^2].
RenormResult varpi_renorm(const RealX& x, const YSchedule& schedule, const RealX& r, const PrecisionContext& ctx);

// -int_{x+y}^inf cos t/t dt + int_{x+r y^2}^{x+y} cos t/t dt as y -> 0.
RenormResult ci_renorm(const RealX& x, const YSchedule& schedule, const RealX& r, const PrecisionContext& ctx);

// int_{x+y}^inf cos t/t^2 dt - int_{x+y/2}^{x+y} cos t/t^2 dt as y -> 0.
RenormResult ci2_renorm(const RealX& x, const YSchedule& schedule, const PrecisionContext& ctx);

struct Extrapolation {
  RealX value;
  RealX error;
  std::vector<RealX> powers;
};

// Repeated Richardson elimination on a geometric schedule. Each level reads
// the leading power p of y from the ratio of the last two differences and
// removes it, snapping p to a nearby k/d (d <= 12) when the estimates
// settle on one; stops after 8 levels, at an unsettled power beyond the
// first level, when differences reach noise, or when the
// differences stop shrinking geometrically. The error is the larger of the
// final spread and the change made by the last level.
Extrapolation richardson(std::span<const RealX> ys, std::span<const RealX> values, const RealX& noise);

}  // namespace mzv::renorm
