#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lpt/bipoly.hpp"
#include "lpt/errors.hpp"
#include "lpt/rational.hpp"
#include "support/random_poly.hpp"

using lpt::BigRational;
using lpt::BiPoly;
using lpt::Monomial;

namespace {

const BiPoly n = BiPoly::n();
const BiPoly lam = BiPoly::lambda();
BigRational q(long a, long b = 1) { return BigRational(a, b); }

}  // namespace

TEST_CASE("BigRational stays canonical") {
  CHECK(q(6, -4).to_string() == "-3/2");
  CHECK(q(0, 7).to_string() == "0");
  CHECK(q(10, 5).to_string() == "2");
  CHECK(BigRational::parse("-14/21") == q(-2, 3));
  CHECK(BigRational::parse("+5") == q(5));
  CHECK((q(1, 3) + q(1, 6)).to_string() == "1/2");
  CHECK(q(2, 3).pow(3) == q(8, 27));
  CHECK(q(-3, 4).reciprocal() == q(-4, 3));
  CHECK(q(1, 3) < q(1, 2));
}

TEST_CASE("BigRational parsing rejects floats and junk") {
  CHECK_THROWS_AS(BigRational::parse("0.5"), lpt::ValidationError);
  CHECK_THROWS_AS(BigRational::parse("1e3"), lpt::ValidationError);
  CHECK_THROWS_AS(BigRational::parse("1/0"), lpt::ValidationError);
  CHECK_THROWS_AS(BigRational::parse("1/-2"), lpt::ValidationError);
  CHECK_THROWS_AS(BigRational::parse(""), lpt::ValidationError);
  CHECK_THROWS_AS(BigRational::parse("x"), lpt::ValidationError);
  CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("decimal literals convert exactly") {
  CHECK(BigRational::parse_decimal("0.001") == q(1, 1000));
  CHECK(BigRational::parse_decimal("1e-3") == q(1, 1000));
  CHECK(BigRational::parse_decimal("-2.5E+2") == q(-250));
  CHECK(BigRational::parse_decimal("1/10000") == q(1, 10000));
  CHECK(BigRational::parse_decimal(".5") == q(1, 2));
  CHECK_THROWS_AS(BigRational::parse_decimal("1..2"), lpt::ValidationError);
  CHECK_THROWS_AS(BigRational::parse_decimal("e5"), lpt::ValidationError);
}

TEST_CASE("poly_add") {
  CHECK((n + (-n)).is_zero());
  CHECK((n + BiPoly(q(1, 2))) + BiPoly(q(1, 2)) == n + BiPoly(1));
  CHECK(lam * n * n + BiPoly(3) * lam * n * n == BiPoly::term(4, 2, 1));
}

TEST_CASE("poly_mul") {
  CHECK(n * n == BiPoly::term(1, 2, 0));
  CHECK(((n + BiPoly(q(1, 2))) * BiPoly{}).is_zero());
  const BiPoly product = (BiPoly(2) * n + BiPoly(5)) * (lam * q(1, 4));
  CHECK(product == BiPoly::term(q(1, 2), 1, 1) + BiPoly::term(q(5, 4), 0, 1));
}

TEST_CASE("poly_scale_div") {
  CHECK((BiPoly(2) * n + BiPoly(1)).scale_div(2) == n + BiPoly(q(1, 2)));
  CHECK(BiPoly{}.scale_div(-2).is_zero());
  const BiPoly c14 = (-lam * (BiPoly(2) * n + BiPoly(5))).scale_div(2);
  CHECK(c14.scale_div(-2) == lam * (BiPoly(2) * n + BiPoly(5)) * q(1, 4));
  CHECK_THROWS_AS(static_cast<void>(n.scale_div(0)), std::domain_error);
}

TEST_CASE("poly_eval") {
  CHECK((n + BiPoly(q(1, 2))).eval(0, 0) == q(1, 2));
  const BiPoly e3 = lam * q(5, 16) *
                    (BiPoly::term(4, 3, 0) + BiPoly::term(6, 2, 0) + BiPoly::term(8, 1, 0) + BiPoly(3));
  CHECK(e3.eval(0, 1) == q(15, 16));
  CHECK((n * n).eval(3, 7) == q(9));
}

TEST_CASE("structure queries") {
  const BiPoly p = BiPoly::term(3, 2, 1) + BiPoly::term(-1, 0, 4) + BiPoly(7);
  CHECK(p.degree_n() == 2);
  CHECK(p.degree_lambda() == 4);
  CHECK_FALSE(p.is_lambda_only());
  CHECK(p.coefficient(Monomial{2, 1}) == q(3));
  CHECK(p.coefficient(Monomial{1, 1}).is_zero());
  CHECK(p.lambda_slice(1) == BiPoly::term(3, 2, 0));
  CHECK(p.rescale_lambda(2) == BiPoly::term(6, 2, 1) + BiPoly::term(-16, 0, 4) + BiPoly(7));
  CHECK(BiPoly(5).is_constant());
  CHECK_FALSE(n.is_constant());
}

TEST_CASE("text form is exponent-sorted and parses back") {
  const BiPoly p = BiPoly::term(q(-3, 4), 1, 2) + BiPoly::term(2, 0, 5) + BiPoly(q(1, 2)) + BiPoly::term(1, 1, 0);
  CHECK(p.to_string() == "{(0,0):1/2, (0,5):2, (1,0):1, (1,2):-3/4}");
  CHECK(BiPoly{}.to_string() == "{}");
  CHECK(BiPoly::parse("{}").is_zero());
  CHECK_THROWS_AS(BiPoly::parse("{(1,0)1}"), lpt::ValidationError);
  CHECK_THROWS_AS(BiPoly::parse("(1,0):1"), lpt::ValidationError);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const BiPoly r = lpt::test::random_bipoly(rng);
    CHECK(BiPoly::parse(r.to_string()) == r);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const BiPoly a = lpt::test::random_bipoly(rng);
    const BiPoly b = lpt::test::random_bipoly(rng);
    const BiPoly c = lpt::test::random_bipoly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    const BiPoly ab = a * b;
    for (const auto& [m, coeff] : ab.terms()) CHECK_FALSE(coeff.is_zero());
  }
}

TEST_CASE("scale_div inverts scalar multiplication") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const BiPoly a = lpt::test::random_bipoly(rng);
    const BigRational s = lpt::test::random_nonzero_rational(rng);
    CHECK((a * BiPoly(s)).scale_div(s) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const BiPoly a = lpt::test::random_bipoly(rng);
    const BiPoly b = lpt::test::random_bipoly(rng);
    const BigRational nv = lpt::test::random_rational(rng);
    const BigRational lv = lpt::test::random_rational(rng);
    CHECK((a * b).eval(nv, lv) == a.eval(nv, lv) * b.eval(nv, lv));
    CHECK((a + b).eval(nv, lv) == a.eval(nv, lv) + b.eval(nv, lv));
  }
}
