#pragma once

#include <map>
#include <span>
#include <vector>

#include "mzv/partition.hpp"
#include "mzv/rational.hpp"
#include "mzv/zeta_polynomial.hpp"

namespace mzv::exactalg {

/// Renormalized value of zeta(1,...,1) with n ones, as an exact polynomial in
/// the atoms zeta(k) (atom 1 = Euler's constant).
///
/// Built from a_0 = 1 and n*a_n = sum_{k=1..n} (-1)^{k+1} a_{n-k} zeta(k).
/// a_n is the coefficient of z^{n+1} in the Taylor series of 1/Gamma(z) and
/// is homogeneous of weight n.
ZetaPolynomial recip_gamma_coeff(int n);

/// Signed multinomial numbers (-1)^{n-l} n! / (prod parts * prod m_j!) for
/// every partition of n >= 1. These are the integer numerators of
/// n! * recip_gamma_coeff(n), keyed by the partition whose parts are the atoms.
std::map<IntPartition, BigInt> signed_diagonal_coefficients(int n);

/// Reads n! * p off by monomial shape. Throws std::invalid_argument when p has
/// a monomial of weight other than n or a non-integer scaled coefficient.
std::map<IntPartition, BigInt> coefficients_by_partition(const ZetaPolynomial& p, int n);

class RationalMatrix {
 public:
  explicit RationalMatrix(int n);
  RationalMatrix(int n, std::vector<Rational> row_major);
  static RationalMatrix identity(int n);

  int size() const noexcept { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  Rational trace() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

 private:
  int n_;
  std::vector<Rational> a_;
};

/// [tr(A), tr(A^2), ..., tr(A^n)].
std::vector<Rational> power_traces(const RationalMatrix& a, int n);

/// Determinant recovered from power traces by evaluating recip_gamma_coeff(n)
/// at zeta(k) -> traces[k-1]. Throws LengthMismatch on an empty list.
Rational det_from_traces(std::span<const Rational> traces);

/// Fraction-free (Bareiss) elimination with row pivoting.
Rational det_bareiss(const RationalMatrix& a);

}  // namespace mzv::exactalg
