#include "mzv/stuffle.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "mzv/errors.hpp"
#include "mzv/exactalg.hpp"

namespace mzv::stuffle {

Token Token::symbol(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty indeterminate name");
  Token t;
  t.symbols_.push_back(std::move(name));
  return t;
}

Token Token::number(Rational value) {
  if (value <= 0) throw std::invalid_argument("numeric arguments must be positive");
  Token t;
  t.value_ = std::move(value);
  return t;
}

Token Token::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty composition argument");
  if (std::isdigit(static_cast<unsigned char>(text.front())) || text.front() == '.')
    return number(parse_rational(text));
  Token sum;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    std::string part = text.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    Token piece = symbol(part);
    sum = sum.symbols_.empty() ? piece : sum + piece;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return sum;
}

bool Token::is_integer() const { return !is_symbolic() && denominator(value_) == 1; }

Token operator+(const Token& a, const Token& b) {
  if (a.is_symbolic() != b.is_symbolic())
    throw std::invalid_argument("cannot add a symbolic argument to a numeric one");
  Token t;
  if (a.is_symbolic()) {
    t.symbols_ = a.symbols_;
    t.symbols_.insert(t.symbols_.end(), b.symbols_.begin(), b.symbols_.end());
    std::sort(t.symbols_.begin(), t.symbols_.end());
  } else {
    t.value_ = a.value_ + b.value_;
  }
  return t;
}

std::strong_ordering operator<=>(const Token& a, const Token& b) {
  if (a.is_symbolic() != b.is_symbolic()) return a.is_symbolic() ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.is_symbolic()) return a.symbols_ <=> b.symbols_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Token::to_string() const {
  if (!is_symbolic()) return mzv::to_string(value_);
  std::string s;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) s += "+";
    s += symbols_[i];
  }
  return s;
}

Composition::Composition(std::vector<Token> args) : args_(std::move(args)) {
  if (args_.empty()) throw std::invalid_argument("composition must be non-empty");
  const bool symbolic = args_.front().is_symbolic();
  for (const Token& t : args_) {
    if (t.is_symbolic() != symbolic) throw std::invalid_argument("composition mixes symbolic and numeric arguments");
  }
}

Composition Composition::parse(const std::string& text) {
  std::vector<Token> args;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char c) { return std::isspace(c); }), part.end());
    args.push_back(Token::parse(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Composition(std::move(args));
}

bool Composition::is_all_ones() const {
  return std::all_of(args_.begin(), args_.end(), [](const Token& t) { return !t.is_symbolic() && t.value() == 1; });
}

std::string Composition::to_string() const {
  std::string s = "ζ(";
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i) s += ",";
    s += args_[i].to_string();
  }
  return s + ")";
}

FormalMZVSum FormalMZVSum::single(const Composition& c, const Rational& coeff) {
  FormalMZVSum s;
  s.add_term(c, coeff);
  return s;
}

Rational FormalMZVSum::coefficient(const Composition& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormalMZVSum::add_term(const Composition& c, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalMZVSum& FormalMZVSum::operator+=(const FormalMZVSum& other) {
  for (const auto& [c, q] : other.terms_) add_term(c, q);
  return *this;
}

FormalMZVSum& FormalMZVSum::operator-=(const FormalMZVSum& other) {
  for (const auto& [c, q] : other.terms_) add_term(c, -q);
  return *this;
}

FormalMZVSum& FormalMZVSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [comp, q] : terms_) q *= c;
  return *this;
}

namespace {

std::string signed_term(bool first, const Rational& coeff, const std::string& body) {
  std::string s;
  Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
  if (first) s += coeff < 0 ? "−" : "";
  else s += coeff < 0 ? " − " : " + ";
  if (mag != 1) s += mzv::to_string(mag) + "·";
  return s + body;
}

}  // namespace

std::string FormalMZVSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [c, q] : terms_) {
    s += signed_term(first, q, c.to_string());
    first = false;
  }
  return s;
}

std::string to_string(const ProductSum& p) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& term : p) {
    std::string body;
    for (const auto& f : term.factors) body += f.to_string();
    if (body.empty()) body = "1";
    s += signed_term(first, term.coeff, body);
    first = false;
  }
  return s;
}

namespace {

using Word = std::vector<Token>;
using WordSum = std::map<Word, Rational>;

void prepend_into(WordSum& out, const Token& head, const WordSum& tails) {
  for (const auto& [w, c] : tails) {
    Word word;
    word.reserve(w.size() + 1);
    word.push_back(head);
    word.insert(word.end(), w.begin(), w.end());
    out[word] += c;
  }
}

WordSum stuffle_words(std::span<const Token> a, std::span<const Token> b) {
  if (a.empty()) return {{Word(b.begin(), b.end()), Rational(1)}};
  if (b.empty()) return {{Word(a.begin(), a.end()), Rational(1)}};
  WordSum out;
  prepend_into(out, a.front(), stuffle_words(a.subspan(1), b));
  prepend_into(out, b.front(), stuffle_words(a, b.subspan(1)));
  prepend_into(out, a.front() + b.front(), stuffle_words(a.subspan(1), b.subspan(1)));
  return out;
}

}  // namespace

FormalMZVSum stuffle_product(const Composition& a, const Composition& b) {
  if (a.is_symbolic() != b.is_symbolic())
    throw std::invalid_argument("cannot multiply symbolic and numeric compositions");
  FormalMZVSum out;
  for (const auto& [w, c] : stuffle_words(a.args(), b.args())) out.add_term(Composition(w), c);
  return out;
}

FormalMZVSum stuffle_product(const FormalMZVSum& a, const FormalMZVSum& b) {
  FormalMZVSum out;
  for (const auto& [ca, qa] : a.terms())
    for (const auto& [cb, qb] : b.terms()) {
      FormalMZVSum prod = stuffle_product(ca, cb);
      prod *= qa * qb;
      out += prod;
    }
  return out;
}

FormalMZVSum expand(const ProductSum& p) {
  FormalMZVSum out;
  for (const auto& term : p) {
    if (term.factors.empty()) throw std::invalid_argument("a constant term has no MZV expansion");
    FormalMZVSum acc = FormalMZVSum::single(term.factors.front());
    for (std::size_t i = 1; i < term.factors.size(); ++i)
      acc = stuffle_product(acc, FormalMZVSum::single(term.factors[i]));
    acc *= term.coeff;
    out += acc;
  }
  return out;
}

FormalMZVSum product_of_singles_expansion(std::span<const Token> s) {
  if (s.empty() || s.size() > 6) throw DepthOutOfRange("product_of_singles_expansion supports 1..6 factors");
  FormalMZVSum acc = FormalMZVSum::single(Composition{s.front()});
  for (std::size_t i = 1; i < s.size(); ++i) acc = stuffle_product(acc, FormalMZVSum::single(Composition{s[i]}));
  return acc;
}

FormalMZVSum euler_reflection_rhs(const Token& s1, const Token& s2) {
  FormalMZVSum out;
  out.add_term(Composition{s1, s2}, 1);
  out.add_term(Composition{s2, s1}, 1);
  out.add_term(Composition{s1 + s2}, 1);
  return out;
}

ProductSum hoffman_reflection_terms(const Token& s1, const Token& s2, const Token& s3) {
  ProductSum p;
  const Token s[3] = {s1, s2, s3};
  int order[3] = {0, 1, 2};
  do {
    p.push_back({1, {Composition{s[order[0]], s[order[1]], s[order[2]]}}});
  } while (std::next_permutation(order, order + 3));
  p.push_back({1, {Composition{s1}, Composition{s2 + s3}}});
  p.push_back({1, {Composition{s2}, Composition{s1 + s3}}});
  p.push_back({1, {Composition{s3}, Composition{s1 + s2}}});
  p.push_back({-2, {Composition{s1 + s2 + s3}}});
  return p;
}

FormalMZVSum hoffman_reflection_rhs(const Token& s1, const Token& s2, const Token& s3) {
  return expand(hoffman_reflection_terms(s1, s2, s3));
}

namespace {

// Restricted growth strings: block[i] <= 1 + max(block[0..i-1]).
void set_partitions(std::size_t n, std::vector<int>& block, int max_block, std::vector<std::vector<int>>& out) {
  if (block.size() == n) {
    out.push_back(block);
    return;
  }
  for (int b = 0; b <= max_block + 1; ++b) {
    block.push_back(b);
    set_partitions(n, block, std::max(max_block, b), out);
    block.pop_back();
  }
}

}  // namespace

SymmetricRelation symmetric_sum_relation(std::span<const Token> s) {
  if (s.empty() || s.size() > 6) throw DepthOutOfRange("symmetric_sum_relation supports 1..6 arguments");
  SymmetricRelation rel;
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<Token> args;
    for (std::size_t i : order) args.push_back(s[i]);
    rel.permutation_sum.add_term(Composition(std::move(args)), 1);
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<std::vector<int>> partitions;
  std::vector<int> block;
  set_partitions(s.size(), block, -1, partitions);
  for (const auto& assignment : partitions) {
    const int blocks = *std::max_element(assignment.begin(), assignment.end()) + 1;
    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(blocks));
    for (std::size_t i = 0; i < assignment.size(); ++i) members[static_cast<std::size_t>(assignment[i])].push_back(i);
    ProductTerm term{1, {}};
    for (const auto& m : members) {
      Token sum = s[m.front()];
      for (std::size_t j = 1; j < m.size(); ++j) sum = sum + s[m[j]];
      term.factors.push_back(Composition{sum});
      Rational weight(factorial(static_cast<unsigned>(m.size() - 1)));
      term.coeff *= (m.size() % 2 == 0) ? Rational(-weight) : weight;
    }
    rel.set_partition_side.push_back(std::move(term));
  }
  return rel;
}

namespace {

ZetaPolynomial renormalized_factor(const Composition& c) {
  if (c.is_all_ones()) return exactalg::recip_gamma_coeff(static_cast<int>(c.depth()));
  if (c.depth() == 1 && c.args().front().is_integer())
    return ZetaPolynomial::atom(numerator(c.args().front().value()).convert_to<int>());
  throw NonConvergent("no renormalized closed form for " + c.to_string());
}

}  // namespace

ZetaPolynomial renormalized_value(const ProductSum& p) {
  ZetaPolynomial total;
  for (const auto& term : p) {
    ZetaPolynomial prod = ZetaPolynomial::constant(term.coeff);
    for (const auto& f : term.factors) prod = prod * renormalized_factor(f);
    total += prod;
  }
  return total;
}

ZetaPolynomial renormalized_value(const FormalMZVSum& s) { return renormalized_value(as_product_sum(s)); }

ProductSum as_product_sum(const FormalMZVSum& s) {
  ProductSum p;
  for (const auto& [c, q] : s.terms()) p.push_back({q, {c}});
  return p;
}

namespace {

RealX evaluate_numeric(const Composition& c, const PrecisionContext& ctx, std::uint64_t N,
                       std::map<Composition, RealX>& memo) {
  if (auto it = memo.find(c); it != memo.end()) return it->second;
  if (c.is_symbolic()) throw DomainError("numeric check needs numeric compositions, got " + c.to_string());
  RealX value;
  if (c.is_all_ones()) {
    value = numerics::mzv_ones_closed_form(static_cast<int>(c.depth()), ctx);
  } else {
    if (c.args().front().value() < 2)
      throw NonConvergent(c.to_string() + " has leading argument < 2 and is not an all-ones tuple");
    std::vector<Rational> args;
    for (const auto& t : c.args()) args.push_back(t.value());
    value = numerics::mzv_numeric(args, N, ctx).value;
  }
  memo.emplace(c, value);
  return value;
}

RealX evaluate_side(const ProductSum& p, const PrecisionContext& ctx, std::uint64_t N,
                    std::map<Composition, RealX>& memo) {
  RealX total = 0;
  for (const auto& term : p) {
    RealX prod = to_real(term.coeff);
    for (const auto& f : term.factors) prod *= evaluate_numeric(f, ctx, N, memo);
    total += prod;
  }
  return total;
}

}  // namespace

IdentityReport check_identity_numeric(const ProductSum& lhs, const ProductSum& rhs, const PrecisionContext& ctx,
                                      const RealX& tolerance, std::uint64_t N) {
  PrecisionScope scope(ctx);
  std::map<Composition, RealX> memo;
  IdentityReport r;
  r.lhs = evaluate_side(lhs, ctx, N, memo);
  r.rhs = evaluate_side(rhs, ctx, N, memo);
  r.difference = abs(r.lhs - r.rhs);
  r.tolerance = tolerance;
  r.pass = r.difference < tolerance;
  return r;
}

IdentityReport check_identity_numeric(const FormalMZVSum& lhs, const FormalMZVSum& rhs, const PrecisionContext& ctx,
                                      const RealX& tolerance, std::uint64_t N) {
  return check_identity_numeric(as_product_sum(lhs), as_product_sum(rhs), ctx, tolerance, N);
}

}  // namespace mzv::stuffle
