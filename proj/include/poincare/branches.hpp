#pragma once

// Positive y-roots of F_m(y, t) and Fhat_n(y, t) followed across a grid of
// negative rational t, and their crossings of the line y = 1.
//
// At each fixed t < 0 the roots in (0, 1 - t) are simple, so branch i is
// simply the i-th smallest root; no continuation is needed.

#include <string>
#include <vector>

#include "poincare/realroot.hpp"
#include "poincare/recurrences.hpp"
#include "poincare/verify.hpp"

namespace poincare {

struct GridPoint {
  Rational t;
  IsolationList roots;  // ascending; roots[i] is branch i + 1
};

struct BranchTrace {
  Deformation family;
  int index;
  std::vector<GridPoint> points;
};

/// Number of positive branches: m - 2 for F_m, n - 1 for Fhat_n.
int branch_count(Deformation family, int index);

/// Polynomial in y whose roots are the positive branches at t (the root
/// y = 0 of F_m is divided out).
IntPoly branch_polynomial(Deformation family, int index, const Rational& t);

/// The slice polynomial whose roots are the crossing times: P_{m+1} for F_m,
/// Phat_n for Fhat_n.
const IntPoly& slice_polynomial(Deformation family, int index);

/// Isolates the roots in (0, 1 - t) at every grid point to the given width.
/// Grid points are processed on up to `jobs` threads; the result keeps grid
/// order. Throws CountMismatch if a count differs from branch_count and
/// std::invalid_argument for a non-negative grid point.
BranchTrace track_branches(Deformation family, int index, const std::vector<Rational>& grid,
                           const Rational& width, int jobs = 1);

struct CrossingRecord {
  int branch;          // 1-based
  RootInterval tau;    // isolating interval of the crossing time
  Rational t_left;     // branch is above y = 1 here
  Rational t_right;    // and below y = 1 here
};

/// One record per root tau_1 < ... < tau_d of the slice polynomial. The
/// branch paired with tau_i is certified, not assumed: just left of tau_i
/// exactly i - 1 branches lie below y = 1, just right exactly i do.
/// Intervals are refined to `width`. Throws CountMismatch when the pairing
/// fails and RefinementBudgetExceeded if a bracket cannot be found.
std::vector<CrossingRecord> find_crossings(Deformation family, int index,
                                           const Rational& width = Rational(1, 1 << 20));

/// Wraps find_crossings as a verdict (count must equal branch_count).
Verdict verify_crossings(Deformation family, int index);

/// At t = -1/1024 no branch reaches y = 1 (no root in [1, 1 - t)), and at
/// t = -2^20 every branch is above y = 1 (no root in (0, 1]).
Verdict verify_endpoint_behavior(Deformation family, int index);

/// Compares r_i(t_big) / t_big with the nonzero roots of G_m (matched in
/// order: the smallest branch goes with the root closest to 0). Interval
/// widths are counted against the tolerance.
Verdict verify_scaled_limit(int m, const Rational& t_big, const Rational& tol);

/// The 29 t-values of the reference figure for F_4, ascending.
std::vector<Rational> figure_grid();

/// Reference coordinates of the two branches of F_4 on figure_grid(), as
/// printed (8 decimals): {lower, upper} per grid point.
struct FigureRow {
  const char* t;
  const char* lower;
  const char* upper;
};
const std::vector<FigureRow>& figure_reference();

/// Every midpoint on the figure grid within `tol` of the reference, at
/// refinement width `width`.
Verdict verify_figure(const Rational& tol, const Rational& width);

/// -2^k for k = -10..10 (descending from -1/1024), widened until every
/// crossing lies inside, then densified by dyadic bisection until each
/// bracket holds at most one crossing. Grid points that happen to be exact
/// crossings are nudged to a nearby dyadic value.
std::vector<Rational> default_grid(Deformation family, int index);

/// Along the default grid every branch of F_{n-1} moves from above y = 1 to
/// below it exactly once, each sign-change bracket holds exactly one root
/// of P_n, and the number of crossings is n - 3. Requires n >= 4.
Verdict verify_crossing_shadow(int n, int jobs = 1);

/// CSV with header t,branch,mid,lo,hi,t_exact,lo_exact,hi_exact; decimals
/// rounded to `digits`, exact columns as p/q, LF line endings.
std::string figure_csv(const BranchTrace& trace, int digits);

}  // namespace poincare
