#include "mzv/real.hpp"

#include <stdexcept>

namespace mzv {

namespace {

std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

constexpr const char* kEulerGamma =
    "0.5772156649015328606065120900824024310421593359399235988057672348848677267776646709369470632917467495";
constexpr const char* kPi =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

}  // namespace

PrecisionContext::PrecisionContext(unsigned digits) : working_digits(digits) {
  if (digits < kMinDigits || digits > kMaxDigits)
    throw std::invalid_argument("working precision must be between " + std::to_string(kMinDigits) + " and " +
                                std::to_string(kMaxDigits) + " digits");
}

RealX PrecisionContext::epsilon() const {
  PrecisionScope scope(*this);
  return pow(RealX(10), -static_cast<int>(working_digits));
}

PrecisionScope::PrecisionScope(const PrecisionContext& ctx)
    : lock_(precision_mutex()), saved_(RealX::default_precision()) {
  RealX::default_precision(ctx.working_digits + PrecisionContext::kGuardDigits);
}

PrecisionScope::~PrecisionScope() { RealX::default_precision(saved_); }

namespace constants {

RealX euler_gamma() { return RealX(kEulerGamma); }
RealX pi() { return RealX(kPi); }

}  // namespace constants

std::string format(const RealX& x, const PrecisionContext& ctx) {
  return x.str(static_cast<std::streamsize>(ctx.working_digits), std::ios_base::fmtflags(0));
}

RealX to_real(const Rational& q) {
  RealX num(numerator(q));
  RealX den(denominator(q));
  return num / den;
}

RealX parse_real(std::string_view text) {
  if (text == "pi") return constants::pi();
  if (text == "e") return exp(RealX(1));
  if (text.starts_with("e^")) return exp(to_real(parse_rational(text.substr(2))));
  return to_real(parse_rational(text));
}

}  // namespace mzv
