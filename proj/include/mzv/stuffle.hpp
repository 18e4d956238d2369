#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mzv/numerics.hpp"
#include "mzv/rational.hpp"
#include "mzv/real.hpp"
#include "mzv/zeta_polynomial.hpp"

namespace mzv::stuffle {

// One argument of a composition: either a formal sum of indeterminates
// (kept as a sorted multiset so s1+s2 and s2+s1 coincide) or an exact
// positive number.
class Token {
 public:
  static Token symbol(std::string name);
  static Token number(Rational value);
  // "s1", "s1+s2", "3", "3/2".
  static Token parse(const std::string& text);

  bool is_symbolic() const noexcept { return !symbols_.empty(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const Rational& value() const noexcept { return value_; }
  bool is_integer() const;

  friend Token operator+(const Token& a, const Token& b);
  friend bool operator==(const Token&, const Token&) = default;
  friend std::strong_ordering operator<=>(const Token& a, const Token& b);

  std::string to_string() const;

 private:
  std::vector<std::string> symbols_;
  Rational value_;
};

// Ordered argument tuple (s_1, ..., s_k); s_1 sits on the largest summation
// index. Non-empty and never mixes symbolic with numeric tokens.
class Composition {
 public:
  explicit Composition(std::vector<Token> args);
  Composition(std::initializer_list<Token> args) : Composition(std::vector<Token>(args)) {}
  // "2,3,1" or "s1,s2".
  static Composition parse(const std::string& text);

  const std::vector<Token>& args() const noexcept { return args_; }
  std::size_t depth() const noexcept { return args_.size(); }
  bool is_symbolic() const { return args_.front().is_symbolic(); }
  // Numeric composition with every argument equal to 1.
  bool is_all_ones() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.args_ <=> b.args_; }

  // "ζ(2,3,1)"
  std::string to_string() const;

 private:
  std::vector<Token> args_;
};

class FormalMZVSum {
 public:
  using TermMap = std::map<Composition, Rational>;

  FormalMZVSum() = default;
  static FormalMZVSum single(const Composition& c, const Rational& coeff = 1);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Composition& c) const;
  void add_term(const Composition& c, const Rational& coeff);

  FormalMZVSum& operator+=(const FormalMZVSum& other);
  FormalMZVSum& operator-=(const FormalMZVSum& other);
  FormalMZVSum& operator*=(const Rational& c);
  friend FormalMZVSum operator+(FormalMZVSum a, const FormalMZVSum& b) { return a += b; }
  friend FormalMZVSum operator-(FormalMZVSum a, const FormalMZVSum& b) { return a -= b; }
  friend FormalMZVSum operator*(const Rational& c, FormalMZVSum a) { return a *= c; }
  friend bool operator==(const FormalMZVSum&, const FormalMZVSum&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

// coeff * prod factors, i.e. a product of MZVs before stuffle expansion.
struct ProductTerm {
  Rational coeff;
  std::vector<Composition> factors;
};
using ProductSum = std::vector<ProductTerm>;

std::string to_string(const ProductSum& p);

// Quasi-shuffle product on compositions, extended bilinearly to sums.
FormalMZVSum stuffle_product(const Composition& a, const Composition& b);
FormalMZVSum stuffle_product(const FormalMZVSum& a, const FormalMZVSum& b);

// Expands every product term with the stuffle product.
FormalMZVSum expand(const ProductSum& p);

// zeta(s_1) * ... * zeta(s_n) as a sum of MZVs (left fold), 1 <= n <= 6.
FormalMZVSum product_of_singles_expansion(std::span<const Token> s);

// zeta(s1,s2) + zeta(s2,s1) + zeta(s1+s2).
FormalMZVSum euler_reflection_rhs(const Token& s1, const Token& s2);

// Unexpanded depth-3 reflection formula: six permuted depth-3 terms,
// zeta(si) zeta(sj+sk) for the three splittings, and -2 zeta(s1+s2+s3).
ProductSum hoffman_reflection_terms(const Token& s1, const Token& s2, const Token& s3);
FormalMZVSum hoffman_reflection_rhs(const Token& s1, const Token& s2, const Token& s3);

// Symmetrized sum of MZVs over all orderings against the set-partition
// expansion sum_P prod_B (-1)^{|B|-1} (|B|-1)! zeta(sum_{i in B} s_i).
struct SymmetricRelation {
  FormalMZVSum permutation_sum;
  ProductSum set_partition_side;
};
SymmetricRelation symmetric_sum_relation(std::span<const Token> s);

// Replaces all-ones compositions of depth d by recip_gamma_coeff(d) and
// singletons (k) by the atom zeta(k). Throws NonConvergent for anything else.
ZetaPolynomial renormalized_value(const ProductSum& p);
ZetaPolynomial renormalized_value(const FormalMZVSum& s);

struct IdentityReport {
  RealX lhs;
  RealX rhs;
  RealX difference;
  RealX tolerance;
  bool pass = false;
};

// Numeric evaluation of both sides. Compositions must be numeric with
// leading argument >= 2, or all-ones (which take their renormalized closed
// form). Throws NonConvergent otherwise.
IdentityReport check_identity_numeric(const ProductSum& lhs, const ProductSum& rhs, const PrecisionContext& ctx,
                                      const RealX& tolerance, std::uint64_t N = 2000);
IdentityReport check_identity_numeric(const FormalMZVSum& lhs, const FormalMZVSum& rhs, const PrecisionContext& ctx,
                                      const RealX& tolerance, std::uint64_t N = 2000);

ProductSum as_product_sum(const FormalMZVSum& s);

}  // namespace mzv::stuffle
