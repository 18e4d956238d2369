#include "mzv/zeta_polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mzv {

ZetaMonomial::ZetaMonomial(std::vector<int> atoms) : atoms_(std::move(atoms)) {
  for (int k : atoms_) {
    if (k < 1) throw std::invalid_argument("zeta atoms must be positive integers");
  }
  std::sort(atoms_.begin(), atoms_.end(), std::greater<>());
  weight_ = std::accumulate(atoms_.begin(), atoms_.end(), 0);
}

ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b) {
  std::vector<int> atoms = a.atoms_;
  atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());
  return ZetaMonomial(std::move(atoms));
}

std::strong_ordering operator<=>(const ZetaMonomial& a, const ZetaMonomial& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return a.atoms_ <=> b.atoms_;
}

ZetaPolynomial ZetaPolynomial::constant(const Rational& c) {
  ZetaPolynomial p;
  p.add_term(ZetaMonomial{}, c);
  return p;
}

ZetaPolynomial ZetaPolynomial::atom(int k) {
  ZetaPolynomial p;
  p.add_term(ZetaMonomial{k}, Rational(1));
  return p;
}

Rational ZetaPolynomial::coefficient(const ZetaMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ZetaPolynomial::add_term(const ZetaMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool ZetaPolynomial::is_homogeneous(int w) const {
  return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return t.first.weight() == w; });
}

ZetaPolynomial& ZetaPolynomial::operator+=(const ZetaPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ZetaPolynomial& ZetaPolynomial::operator-=(const ZetaPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ZetaPolynomial& ZetaPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

ZetaPolynomial operator*(const ZetaPolynomial& a, const ZetaPolynomial& b) {
  ZetaPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

namespace {

std::string superscript(int e) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(e)) s += digits[c - '0'];
  return s;
}

}  // namespace

std::string to_string(const ZetaMonomial& m) {
  if (m.is_constant()) return "1";
  std::string out;
  const auto& atoms = m.atoms();
  // Render γ first, then ζ(k) in ascending k, matching how the closed forms are usually written.
  std::map<int, int> power;
  for (int k : atoms) ++power[k];
  for (const auto& [k, e] : power) {
    out += (k == 1) ? std::string("γ") : "ζ(" + std::to_string(k) + ")";
    if (e > 1) out += superscript(e);
  }
  return out;
}

std::string ZetaPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  BigInt common = 1;
  for (const auto& [m, c] : terms_) common = lcm(common, denominator(c));
  const bool factor_out = common != 1 && terms_.size() > 1;

  std::string body;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational scaled = factor_out ? Rational(c * common) : c;
    const bool negative = scaled < 0;
    Rational mag = negative ? Rational(-scaled) : scaled;
    if (first) {
      if (negative) body += "−";
    } else {
      body += negative ? " − " : " + ";
    }
    first = false;
    const std::string mono = mzv::to_string(m);
    if (m.is_constant()) {
      body += mzv::to_string(mag);
    } else if (mag == 1) {
      body += mono;
    } else if (denominator(mag) == 1) {
      body += mzv::to_string(mag) + mono;
    } else {
      body += numerator(mag) == 1 ? mono : numerator(mag).str() + mono;
      body += "/" + denominator(mag).str();
    }
  }
  if (factor_out) return "(" + body + ")/" + common.str();
  return body;
}

}  // namespace mzv
