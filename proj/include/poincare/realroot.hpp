#pragma once

// Certified real-root counting and isolation with Sturm sequences.
//
// All arithmetic is exact. Sturm chains are built with primitive pseudo-
// remainders, so every member is a positive multiple of the classical signed
// remainder and sign variations are unaffected.

#include <optional>
#include <vector>

#include "poincare/exact.hpp"

namespace poincare {

/// One end of a counting interval: a rational (open or closed) or +-inf.
struct Endpoint {
  std::optional<Rational> value;  // nullopt means infinite
  bool closed = false;

  static Endpoint neg_inf() { return {}; }
  static Endpoint pos_inf() { return {}; }
  static Endpoint open(const Rational& r) { return {r, false}; }
  static Endpoint closed_at(const Rational& r) { return {r, true}; }
  bool infinite() const { return !value.has_value(); }
};

class SturmChain {
 public:
  /// Builds the chain of the square-free part of p. Throws ZeroPolynomial.
  explicit SturmChain(const IntPoly& p);

  /// Whether the input itself was square-free.
  bool input_square_free() const { return input_square_free_; }
  /// The polynomial the chain was built from (p divided by gcd(p, p')).
  const IntPoly& square_free_part() const { return chain_.front(); }
  const std::vector<IntPoly>& members() const { return chain_; }

  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;

  /// Number of distinct real roots between the two endpoints.
  int count(const Endpoint& lo, const Endpoint& hi) const;

 private:
  std::vector<IntPoly> chain_;
  bool input_square_free_ = true;
};

bool is_square_free(const IntPoly& p);

/// Number of distinct real roots of p in the given interval. Throws
/// ZeroPolynomial for p == 0 and std::invalid_argument for an empty interval.
int count_roots(const IntPoly& p, const Endpoint& lo, const Endpoint& hi);

/// Closed rational interval [lo, hi] holding exactly one simple root.
/// lo == hi means the root is that rational.
struct RootInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Ordered, pairwise disjoint isolating intervals.
using IsolationList = std::vector<RootInterval>;

/// 2^k with 2^k >= 1 + max |a_i / a_n|; every root has modulus below it.
Rational cauchy_bound(const IntPoly& p);

/// Isolates every root of p in the interval, each to width <= precision, in
/// increasing order. Non-exact intervals have endpoints where p is nonzero,
/// with opposite signs. Throws NotSquareFree if p has a repeated root inside
/// the interval.
IsolationList isolate_roots(const IntPoly& p, const Endpoint& lo, const Endpoint& hi,
                            const Rational& precision);

/// Shrinks an isolating interval of a simple root to width <= precision.
/// Split points are dyadic rationals.
RootInterval refine(const IntPoly& p, const RootInterval& iv, const Rational& precision);

/// Same, with the Sturm chain supplied by the caller.
RootInterval refine(const SturmChain& chain, const RootInterval& iv, const Rational& precision);

/// Strict interlacing of the roots of q (degree d+1) around those of p
/// (degree d): s_1 < r_1 < s_2 < ... < r_d < s_{d+1}. Returns false on a
/// degree mismatch, a shared root, or non-real roots. Throws NotSquareFree
/// when either input has a repeated root, and RefinementBudgetExceeded when
/// the intervals cannot be separated within `max_rounds` halvings.
bool check_interlacing(const IntPoly& p, const IntPoly& q, int max_rounds = 400);

/// Refines `iv` (an isolating interval of a root of `chain`'s polynomial)
/// until `other` has no root in it, then returns the constant sign of
/// `other` there. Exact intervals are evaluated directly.
int certified_sign(const SturmChain& chain, RootInterval& iv, const IntPoly& other,
                   int max_rounds = 400);

}  // namespace poincare
