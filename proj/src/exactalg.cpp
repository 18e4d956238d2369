#include "mzv/exactalg.hpp"

#include <stdexcept>

namespace mzv::exactalg {

ZetaPolynomial recip_gamma_coeff(int n) {
  if (n < 0) throw std::invalid_argument("recip_gamma_coeff requires n >= 0");
  std::vector<ZetaPolynomial> a;
  a.reserve(static_cast<std::size_t>(n) + 1);
  a.push_back(ZetaPolynomial::constant(1));
  for (int m = 1; m <= n; ++m) {
    ZetaPolynomial acc;
    for (int k = 1; k <= m; ++k) {
      ZetaPolynomial term = a[static_cast<std::size_t>(m - k)] * ZetaPolynomial::atom(k);
      if (k % 2 == 1) acc += term;
      else acc -= term;
    }
    acc *= Rational(1, m);
    a.push_back(std::move(acc));
  }
  return a.back();
}

std::map<IntPartition, BigInt> signed_diagonal_coefficients(int n) {
  if (n < 1) throw std::invalid_argument("signed_diagonal_coefficients requires n >= 1");
  const BigInt n_fact = factorial(static_cast<unsigned>(n));
  std::map<IntPartition, BigInt> out;
  for (const auto& lambda : partitions_of(n)) {
    BigInt denom = 1;
    for (int part : lambda.parts()) denom *= part;
    for (const auto& [part, mult] : lambda.multiplicities()) denom *= factorial(static_cast<unsigned>(mult));
    BigInt c = n_fact / denom;
    if ((n - lambda.length()) % 2 != 0) c = -c;
    out.emplace(lambda, c);
  }
  return out;
}

std::map<IntPartition, BigInt> coefficients_by_partition(const ZetaPolynomial& p, int n) {
  const Rational scale(factorial(static_cast<unsigned>(n)));
  std::map<IntPartition, BigInt> out;
  for (const auto& [mono, coeff] : p.terms()) {
    if (mono.weight() != n) throw std::invalid_argument("monomial weight differs from n");
    Rational scaled = coeff * scale;
    if (denominator(scaled) != 1) throw std::invalid_argument("scaled coefficient is not an integer");
    out.emplace(IntPartition(mono.atoms()), numerator(scaled));
  }
  return out;
}

RationalMatrix::RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {
  if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
}

RationalMatrix::RationalMatrix(int n, std::vector<Rational> row_major) : n_(n), a_(std::move(row_major)) {
  if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
  if (a_.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("entry count does not match n*n");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const int n = a.n_;
  RationalMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<Rational> power_traces(const RationalMatrix& a, int n) {
  if (n < 1) throw std::invalid_argument("power_traces requires n >= 1");
  std::vector<Rational> traces;
  traces.reserve(static_cast<std::size_t>(n));
  RationalMatrix power = a;
  traces.push_back(power.trace());
  for (int k = 2; k <= n; ++k) {
    power = power * a;
    traces.push_back(power.trace());
  }
  return traces;
}

Rational det_from_traces(std::span<const Rational> traces) {
  if (traces.empty()) throw LengthMismatch("det_from_traces needs at least one trace");
  std::map<int, Rational> assignment;
  for (std::size_t k = 0; k < traces.size(); ++k) assignment.emplace(static_cast<int>(k) + 1, traces[k]);
  return eval_zeta_polynomial(recip_gamma_coeff(static_cast<int>(traces.size())), assignment);
}

Rational det_bareiss(const RationalMatrix& a) {
  const int n = a.size();
  RationalMatrix m = a;
  Rational prev_pivot = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev_pivot;
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  Rational det = m(n - 1, n - 1);
  return sign < 0 ? Rational(-det) : det;
}

}  // namespace mzv::exactalg
