#pragma once

#include <mutex>
#include <string>
#include <string_view>

#include <boost/multiprecision/mpfr.hpp>

#include "mzv/rational.hpp"

namespace mzv {

using RealX = boost::multiprecision::mpfr_float;

// Working precision in decimal digits. Arithmetic runs with a few guard
// digits on top of this; output is rendered with exactly working_digits.
struct PrecisionContext {
  static constexpr unsigned kMinDigits = 16;
  // The embedded reference constants carry 100 digits.
  static constexpr unsigned kMaxDigits = 100;
  static constexpr unsigned kGuardDigits = 10;

  unsigned working_digits = 64;

  PrecisionContext() = default;
  explicit PrecisionContext(unsigned digits);

  // 10^-working_digits
  RealX epsilon() const;
};

// Sets the MPFR default precision for the current scope and restores it on
// exit. Boost keeps that default in a process-wide variable, so scopes are
// serialized through a recursive mutex; nesting on one thread is fine.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionContext& ctx);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

namespace constants {
// 100-digit table values.
RealX euler_gamma();
RealX pi();
}  // namespace constants

// Decimal rendering with ctx.working_digits significant digits.
std::string format(const RealX& x, const PrecisionContext& ctx);

// Parses a decimal, "p/q" rational, or the symbols "e", "e^q" and "pi".
RealX parse_real(std::string_view text);

RealX to_real(const Rational& q);

// Copy of v rounded to the current default precision. Boost keeps the
// precision of the source on copies, so values built outside a
// PrecisionScope must pass through this before use inside one.
inline RealX working(const RealX& v) { return RealX(v, RealX::default_precision()); }

}  // namespace mzv
