#include <doctest.h>

#include <random>

#include "mzv/exactalg.hpp"
#include "mzv/stuffle.hpp"

using namespace mzv;
using namespace mzv::stuffle;

namespace {

Token sym(const char* name) { return Token::symbol(name); }
Token num(int v) { return Token::number(v); }

FormalMZVSum z(std::initializer_list<Token> args, const Rational& coeff = 1) {
  return FormalMZVSum::single(Composition(args), coeff);
}

ProductSum product_of(std::initializer_list<Token> tokens) {
  ProductTerm term{Rational(1), {}};
  for (const Token& t : tokens) term.factors.push_back(Composition{t});
  return {term};
}

Composition random_composition(std::mt19937& rng, int depth, const std::vector<Token>& alphabet) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<Token> args;
  for (int i = 0; i < depth; ++i) args.push_back(alphabet[pick(rng)]);
  return Composition(std::move(args));
}

}  // namespace

TEST_CASE("tokens and compositions") {
  CHECK(Token::parse("s2+s1") == Token::parse("s1+s2"));
  CHECK((sym("s1") + sym("s2")).to_string() == "s1+s2");
  CHECK((num(2) + num(3)) == num(5));
  CHECK_THROWS(sym("s1") + num(2));
  CHECK(Composition::parse("2, 3,1").to_string() == "ζ(2,3,1)");
  CHECK(Composition::parse("1,1,1").is_all_ones());
  CHECK_THROWS(Composition(std::vector<Token>{}));
  CHECK_THROWS(Composition({sym("s1"), num(2)}));
}

TEST_CASE("stuffle_product examples") {
  CHECK(stuffle_product(Composition{sym("s1")}, Composition{sym("s2")}) ==
        z({sym("s1"), sym("s2")}) + z({sym("s2"), sym("s1")}) + z({sym("s1") + sym("s2")}));
  CHECK(stuffle_product(Composition{num(2)}, Composition{num(2)}) == z({num(2), num(2)}, 2) + z({num(4)}));
  CHECK(stuffle_product(Composition{num(2)}, Composition{num(3), num(1)}) ==
        z({num(2), num(3), num(1)}) + z({num(3), num(2), num(1)}) + z({num(3), num(1), num(2)}) + z({num(5), num(1)}) +
            z({num(3), num(3)}));
}

TEST_CASE("stuffle_product is commutative and associative") {
  std::mt19937 rng(2024);
  const std::vector<Token> alphabet{sym("a"), sym("b"), sym("c"), sym("d")};
  std::uniform_int_distribution<int> depth(1, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const Composition x = random_composition(rng, depth(rng), alphabet);
    const Composition y = random_composition(rng, depth(rng), alphabet);
    const Composition w = random_composition(rng, depth(rng), alphabet);
    CHECK(stuffle_product(x, y) == stuffle_product(y, x));
    const FormalMZVSum left = stuffle_product(stuffle_product(x, y), FormalMZVSum::single(w));
    const FormalMZVSum right = stuffle_product(FormalMZVSum::single(x), stuffle_product(y, w));
    CHECK(left == right);
  }
}

TEST_CASE("product_of_singles_expansion") {
  const Token s1 = sym("s1"), s2 = sym("s2"), s3 = sym("s3");
  CHECK(product_of_singles_expansion(std::vector<Token>{s1}) == z({s1}));
  const FormalMZVSum two = product_of_singles_expansion(std::vector<Token>{s1, s2});
  CHECK(two == euler_reflection_rhs(s1, s2));
  CHECK(two.terms().size() == 3);
  const FormalMZVSum three = product_of_singles_expansion(std::vector<Token>{s1, s2, s3});
  CHECK(three.terms().size() == 13);
  CHECK(three == hoffman_reflection_rhs(s1, s2, s3));
  CHECK_THROWS_AS(product_of_singles_expansion(std::vector<Token>(7, s1)), DepthOutOfRange);
}

TEST_CASE("fold order does not matter") {
  const std::vector<Token> s{sym("a"), sym("b"), sym("c"), sym("d")};
  const FormalMZVSum left = product_of_singles_expansion(s);
  FormalMZVSum right = FormalMZVSum::single(Composition{s[3]});
  for (int i = 2; i >= 0; --i) right = stuffle_product(FormalMZVSum::single(Composition{s[static_cast<std::size_t>(i)]}), right);
  CHECK(left == right);
}

TEST_CASE("reflection formula with repeated arguments") {
  const Token t = num(2);
  const FormalMZVSum rhs = hoffman_reflection_rhs(t, t, t);
  CHECK(rhs.coefficient(Composition{t, t, t}) == 6);
  CHECK(rhs == product_of_singles_expansion(std::vector<Token>{t, t, t}));
}

TEST_CASE("symmetric sum relation holds symbolically") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Token> s;
    for (int i = 1; i <= n; ++i) s.push_back(Token::symbol("s" + std::to_string(i)));
    const auto rel = symmetric_sum_relation(s);
    CHECK(rel.permutation_sum == expand(rel.set_partition_side));
  }
}

TEST_CASE("renormalized quasi-shuffle relations at all-ones") {
  const Token one = num(1);
  CHECK(renormalized_value(product_of({one, one})) == renormalized_value(euler_reflection_rhs(one, one)));
  CHECK(renormalized_value(product_of({one, one})) == ZetaPolynomial::atom(1) * ZetaPolynomial::atom(1));
  CHECK(renormalized_value(product_of({one, one, one})) ==
        renormalized_value(hoffman_reflection_terms(one, one, one)));
  for (int n = 2; n <= 6; ++n) {
    const auto rel = symmetric_sum_relation(std::vector<Token>(static_cast<std::size_t>(n), one));
    CHECK(renormalized_value(rel.permutation_sum) == renormalized_value(rel.set_partition_side));
  }
  CHECK_THROWS_AS(renormalized_value(z({num(1), num(2)})), NonConvergent);
}

TEST_CASE("numeric identity checks") {
  PrecisionContext ctx(40);
  PrecisionScope scope(ctx);
  const RealX tol("1e-8");
  auto r22 = check_identity_numeric(product_of({num(2), num(2)}), as_product_sum(euler_reflection_rhs(num(2), num(2))),
                                    ctx, tol);
  CHECK(r22.pass);
  auto r21 = check_identity_numeric(z({num(2), num(1)}), z({num(3)}), ctx, tol);
  CHECK(r21.pass);
  auto r234 = check_identity_numeric(product_of({num(2), num(3), num(4)}), hoffman_reflection_terms(num(2), num(3), num(4)),
                                     ctx, tol);
  CHECK(r234.pass);
  CHECK(r234.difference < RealX("1e-30"));
  CHECK_THROWS_AS(check_identity_numeric(z({num(1), num(2)}), z({num(3)}), ctx, tol), NonConvergent);
}

TEST_CASE("a false identity fails") {
  PrecisionContext ctx(30);
  PrecisionScope scope(ctx);
  auto r = check_identity_numeric(z({num(2), num(2)}), z({num(4)}), ctx, RealX("1e-8"));
  CHECK_FALSE(r.pass);
}
