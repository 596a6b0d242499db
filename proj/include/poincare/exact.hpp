#pragma once

// Exact scalars and dense polynomials.
//
//   Rational  arbitrary-precision rational (GMP mpq, always canonical)
//   IntPoly   univariate polynomial over Z, coefficient i <-> x^i
//   RatPoly   univariate polynomial over Q, same layout
//   BiPoly    polynomial in y whose coefficients are IntPoly in t
//
// Every polynomial keeps its highest stored coefficient nonzero; the zero
// polynomial has no coefficients and degree -1.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace poincare {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient from a shared Pascal triangle; zero when k > n.
Integer binomial(unsigned n, unsigned k);

Integer factorial(unsigned n);

/// (2m-3)!! for m >= 2, and 1 for m = 1.
Integer double_factorial_odd(unsigned m);

/// Parses "p/q", an integer, a decimal ("-4.79128785") or scientific
/// notation ("1e-8") into an exact rational.
Rational parse_rational(std::string_view text);

/// Always "p/q", including integers ("-1/1") and zero ("0/1").
std::string to_fraction_string(const Rational& r);

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& r, int digits);

/// True when the denominator is a power of two.
bool is_dyadic(const Rational& r);

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t power);
  /// x, the identity polynomial.
  static IntPoly variable();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of x^i; zero past the degree.
  Integer coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
  }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  const Integer& leading() const { return coeffs_.back(); }
  std::span<const Integer> coeffs() const { return coeffs_; }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) { return a *= Integer(-1); }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPoly derivative(const IntPoly& p);

/// Horner evaluation.
Rational evaluate(const IntPoly& p, const Rational& x);

/// Sign of p(x) in {-1, 0, 1} using integer-only homogeneous evaluation.
int sign_at(const IntPoly& p, const Rational& x);

/// Sign of p as x -> +inf (positive = true) or -inf.
int sign_at_infinity(const IntPoly& p, bool positive);

/// Quotient of an exact division over Z; throws NotDivisible otherwise.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
IntPoly exact_div(const IntPoly& a, const Integer& d);

/// Positive gcd of the coefficients (0 for the zero polynomial).
Integer content(const IntPoly& p);

/// p divided by its positive content; signs are preserved.
IntPoly primitive_part(const IntPoly& p);

/// lc(b)^(deg a - deg b + 1) * a mod b, with the multiplier's sign folded
/// out so the result is a positive multiple of the true remainder.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// x^deg * p(1/x): the coefficient sequence reversed.
IntPoly reversed(const IntPoly& p);

std::string to_string(const IntPoly& p, std::string_view var = "t");

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const IntPoly& p);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
  }
  std::span<const Rational> coeffs() const { return coeffs_; }

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator*=(const Rational& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

Rational evaluate(const RatPoly& p, const Rational& x);

/// Smallest positive multiple of p with integer coefficients, i.e. the
/// primitive integer polynomial with the same roots and the same signs.
IntPoly clear_denominators(const RatPoly& p);

/// Converts back to IntPoly when every coefficient is integral; throws
/// NotDivisible otherwise.
IntPoly to_int_poly(const RatPoly& p);

class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<IntPoly> y_coeffs);
  /// Constant-in-y polynomial.
  explicit BiPoly(const IntPoly& c);

  static BiPoly y();
  /// Coefficient c(t) times y^power.
  static BiPoly monomial_y(const IntPoly& c, std::size_t power);

  bool is_zero() const { return ys_.empty(); }
  int degree_y() const { return static_cast<int>(ys_.size()) - 1; }
  IntPoly coeff_y(std::size_t j) const {
    return j < ys_.size() ? ys_[j] : IntPoly();
  }
  const IntPoly& leading_y() const { return ys_.back(); }
  std::span<const IntPoly> y_coeffs() const { return ys_; }

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const IntPoly& c);
  BiPoly& operator*=(const Integer& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) { return a *= Integer(-1); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const IntPoly& c) { return a *= c; }
  friend BiPoly operator*(BiPoly a, const Integer& c) { return a *= c; }
  friend BiPoly operator*(const Integer& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void normalize();
  std::vector<IntPoly> ys_;
};

BiPoly derivative_y(const BiPoly& f);

/// f(y0, t) as a polynomial in t.
RatPoly eval_y(const BiPoly& f, const Rational& y0);
/// f(y, t0) as a polynomial in y.
RatPoly eval_t(const BiPoly& f, const Rational& t0);

/// f(1, t), which stays integral.
IntPoly slice_at_one(const BiPoly& f);

/// Divides every t-coefficient exactly; throws NotDivisible.
BiPoly exact_div(const BiPoly& f, const IntPoly& d);
BiPoly exact_div(const BiPoly& f, const Integer& d);

std::string to_string(const BiPoly& f, std::string_view y_var = "y",
                      std::string_view t_var = "t");

}  // namespace poincare
