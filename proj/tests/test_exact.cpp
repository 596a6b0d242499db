#include "doctest.h"

#include <random>

#include "poincare/errors.hpp"
#include "poincare/exact.hpp"

using namespace poincare;

namespace {

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("binomial and factorials") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == Integer("118264581564861424"));
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(double_factorial_odd(1) == 1);
  CHECK(double_factorial_odd(2) == 1);
  CHECK(double_factorial_odd(4) == 15);
  CHECK(double_factorial_odd(6) == 945);
}

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("17") == Rational(17));
  CHECK(parse_rational("-4.79128785") == q(-479128785, 100000000));
  CHECK(parse_rational("1e-8") == Rational(1, 100000000));
  CHECK(parse_rational("-2.5E2") == Rational(-250));
  CHECK(parse_rational(".5") == Rational(1, 2));
  // leading zeros are decimal, not octal
  CHECK(parse_rational("0.88939917") == q(88939917, 100000000));
  CHECK(parse_rational("-0.75000000") == q(-3, 4));
  CHECK(parse_rational("010") == Rational(10));
  CHECK(parse_rational("08/09") == q(8, 9));
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);

  CHECK(to_fraction_string(Rational(-1)) == "-1/1");
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  CHECK(to_fraction_string(q(6, 4)) == "3/2");
  CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
  CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(Rational(5), 0) == "5");
  CHECK(is_dyadic(Rational(3, 8)));
  CHECK(is_dyadic(Rational(7)));
  CHECK_FALSE(is_dyadic(Rational(1, 3)));
}

TEST_CASE("integer polynomial arithmetic") {
  IntPoly a{1, 1};
  IntPoly b{1, -1};
  CHECK(a * b == IntPoly{1, 0, -1});
  CHECK((a + b) == IntPoly{2});
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(derivative(IntPoly{5, 3, 2}) == IntPoly{3, 4});
  CHECK(evaluate(IntPoly{1, 5, 1}, Rational(1, 2)) == Rational(15, 4));
  CHECK(reversed(IntPoly{1, 2, 3}) == IntPoly{3, 2, 1});
  CHECK(to_string(IntPoly{1, 5, 1}) == "1 + 5t + t^2");
  CHECK(to_string(IntPoly{}) == "0");
}

TEST_CASE("sign evaluation agrees with exact evaluation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-50, 50);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 17);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Integer> c;
    for (int i = 0; i < 1 + trial % 7; ++i) c.emplace_back(coef(rng));
    IntPoly p(c);
    Rational x(num(rng), den(rng));
    x.canonicalize();
    CHECK(sign_at(p, x) == sgn(evaluate(p, x)));
  }
  CHECK(sign_at_infinity(IntPoly{0, 0, -1}, false) == -1);
  CHECK(sign_at_infinity(IntPoly{0, 0, 0, 2}, false) == -1);
  CHECK(sign_at_infinity(IntPoly{0, 0, 0, 2}, true) == 1);
}

TEST_CASE("exact division, content, gcd") {
  IntPoly a{1, 1};
  IntPoly b{2, 0, 3};
  CHECK(exact_div(a * b, a) == b);
  CHECK(exact_div(IntPoly{4, 6}, Integer(2)) == IntPoly{2, 3});
  CHECK_THROWS_AS(exact_div(IntPoly{1, 0, 1}, a), NotDivisible);
  CHECK_THROWS_AS(exact_div(IntPoly{3, 5}, Integer(2)), NotDivisible);
  CHECK_THROWS_AS(exact_div(a, IntPoly{}), NotDivisible);

  CHECK(content(IntPoly{6, -9, 12}) == 3);
  CHECK(primitive_part(IntPoly{-6, 9, -12}) == IntPoly{-2, 3, -4});

  IntPoly g = gcd(IntPoly{-2, 0, 2} * IntPoly{3, 1}, IntPoly{1, 1} * IntPoly{1, 1, 1});
  CHECK(g == IntPoly{1, 1});
  CHECK(gcd(IntPoly{0, -2}, IntPoly{0, 0, 4}) == IntPoly{0, 1});
  CHECK(gcd(IntPoly{1, 1}, IntPoly{1, -1}) == IntPoly{1});
}

TEST_CASE("pseudo-remainder is a positive multiple of the remainder") {
  IntPoly a{1, 2, 3, 4};
  IntPoly b{1, 0, -2};
  // lc(b)^(3 - 2 + 1) = 4, already positive.
  IntPoly r = pseudo_remainder(a, b);
  CHECK(r.degree() < b.degree());
  CHECK_NOTHROW(exact_div(IntPoly{4} * a - r, b));

  // Odd step count with a negative leading coefficient: multiplier -2 is
  // replaced by 2.
  IntPoly c{3, 1};
  IntPoly d{1, -2};
  // c(1/2) = 7/2
  CHECK(pseudo_remainder(c, d) == IntPoly{7});
}

TEST_CASE("rational polynomials") {
  RatPoly p(std::vector<Rational>{Rational(1, 2), Rational(0), Rational(-3, 4)});
  CHECK(clear_denominators(p) == IntPoly{2, 0, -3});
  CHECK(evaluate(p, Rational(2)) == Rational(-5, 2));
  CHECK_THROWS_AS(to_int_poly(p), NotDivisible);
  CHECK(to_int_poly(RatPoly(IntPoly{3, 4})) == IntPoly{3, 4});
  RatPoly neg(std::vector<Rational>{Rational(-2, 3), Rational(-4, 3)});
  CHECK(clear_denominators(neg) == IntPoly{-1, -2});
}

TEST_CASE("bivariate polynomials") {
  // f = y (t - 1) + y^2
  BiPoly f({IntPoly{}, IntPoly{-1, 1}, IntPoly{1}});
  CHECK(f.degree_y() == 2);
  CHECK(derivative_y(f) == BiPoly({IntPoly{-1, 1}, IntPoly{2}}));
  CHECK(slice_at_one(f) == IntPoly{0, 1});
  CHECK(eval_t(f, Rational(3)) == RatPoly(IntPoly{0, 2, 1}));
  CHECK(eval_y(f, Rational(2)) == RatPoly(IntPoly{2, 2}));
  CHECK(BiPoly::y() * BiPoly::y() == BiPoly::monomial_y(IntPoly{1}, 2));
  CHECK(exact_div(f * IntPoly{1, 1}, IntPoly{1, 1}) == f);
  CHECK_THROWS_AS(exact_div(f, IntPoly{1, 1}), NotDivisible);
  CHECK(to_string(f) == "y^2 + (-1 + t)y");
}
