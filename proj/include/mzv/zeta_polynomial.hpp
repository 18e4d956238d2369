#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/rational.hpp"

namespace mzv {

// A product of formal atoms zeta(k); the atom 1 stands for Euler's constant.
// Atoms are kept sorted in descending order. The empty monomial is 1.
class ZetaMonomial {
 public:
  ZetaMonomial() = default;
  explicit ZetaMonomial(std::vector<int> atoms);
  ZetaMonomial(std::initializer_list<int> atoms) : ZetaMonomial(std::vector<int>(atoms)) {}

  const std::vector<int>& atoms() const noexcept { return atoms_; }
  int weight() const noexcept { return weight_; }
  bool is_constant() const noexcept { return atoms_.empty(); }

  friend ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b);
  friend bool operator==(const ZetaMonomial&, const ZetaMonomial&) = default;
  // Display order: weight first, then lexicographic on the descending atom lists.
  friend std::strong_ordering operator<=>(const ZetaMonomial& a, const ZetaMonomial& b);

 private:
  std::vector<int> atoms_;
  int weight_ = 0;
};

// Polynomial in the atoms with exact rational coefficients. Zero
// coefficients are never stored.
class ZetaPolynomial {
 public:
  using TermMap = std::map<ZetaMonomial, Rational>;

  ZetaPolynomial() = default;
  static ZetaPolynomial constant(const Rational& c);
  static ZetaPolynomial atom(int k);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const ZetaMonomial& m) const;
  void add_term(const ZetaMonomial& m, const Rational& c);

  // True when every monomial has weight exactly w (the zero polynomial is
  // homogeneous of every weight).
  bool is_homogeneous(int w) const;

  ZetaPolynomial& operator+=(const ZetaPolynomial& other);
  ZetaPolynomial& operator-=(const ZetaPolynomial& other);
  ZetaPolynomial& operator*=(const Rational& c);
  friend ZetaPolynomial operator+(ZetaPolynomial a, const ZetaPolynomial& b) { return a += b; }
  friend ZetaPolynomial operator-(ZetaPolynomial a, const ZetaPolynomial& b) { return a -= b; }
  friend ZetaPolynomial operator*(ZetaPolynomial a, const Rational& c) { return a *= c; }
  friend ZetaPolynomial operator*(const Rational& c, ZetaPolynomial a) { return a *= c; }
  friend ZetaPolynomial operator*(const ZetaPolynomial& a, const ZetaPolynomial& b);
  friend bool operator==(const ZetaPolynomial&, const ZetaPolynomial&) = default;

  // Human form, e.g. "(γ³ − 3γζ(2) + 2ζ(3))/6". The common denominator is
  // pulled out when there is more than one term.
  std::string to_string() const;

 private:
  TermMap terms_;
};

std::string to_string(const ZetaMonomial& m);

// Evaluation homomorphism: every atom k of p is replaced by assignment.at(k).
// T is Rational or RealX. Throws MissingAtom when an atom is unassigned.
template <class T>
T eval_zeta_polynomial(const ZetaPolynomial& p, const std::map<int, T>& assignment) {
  T total = static_cast<T>(0);
  for (const auto& [mono, coeff] : p.terms()) {
    T term = static_cast<T>(coeff);
    for (int k : mono.atoms()) {
      auto it = assignment.find(k);
      if (it == assignment.end()) throw MissingAtom(k);
      term *= it->second;
    }
    total += term;
  }
  return total;
}

}  // namespace mzv
