#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "poincare/errors.hpp"
#include "poincare/realroot.hpp"
#include "poincare/recurrences.hpp"

using namespace poincare;

namespace {

const Endpoint kAll[2] = {Endpoint::neg_inf(), Endpoint::pos_inf()};

IsolationList isolate_all(const IntPoly& p, const Rational& precision = Rational(1, 1 << 20)) {
  return isolate_roots(p, kAll[0], kAll[1], precision);
}

bool ordered_disjoint(const IsolationList& l) {
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    if (l[i].hi > l[i + 1].lo) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("counting with open, closed and infinite ends") {
  // (t + 1) t (t - 2)
  IntPoly p = IntPoly{1, 1} * IntPoly{0, 1} * IntPoly{-2, 1};
  CHECK(count_roots(p, kAll[0], kAll[1]) == 3);
  CHECK(count_roots(p, Endpoint::open(Rational(0)), Endpoint::open(Rational(2))) == 0);
  CHECK(count_roots(p, Endpoint::closed_at(Rational(0)), Endpoint::open(Rational(2))) == 1);
  CHECK(count_roots(p, Endpoint::open(Rational(0)), Endpoint::closed_at(Rational(2))) == 1);
  CHECK(count_roots(p, Endpoint::closed_at(Rational(-1)), Endpoint::closed_at(Rational(2))) == 3);
  CHECK(count_roots(p, Endpoint::open(Rational(-1)), Endpoint::pos_inf()) == 2);
  CHECK(count_roots(p, Endpoint::neg_inf(), Endpoint::open(Rational(0))) == 1);
  CHECK(count_roots(p, Endpoint::closed_at(Rational(2)), Endpoint::closed_at(Rational(2))) == 1);
  CHECK_THROWS_AS(count_roots(p, Endpoint::open(Rational(2)), Endpoint::open(Rational(1))), std::invalid_argument);
  CHECK_THROWS_AS(count_roots(IntPoly{}, kAll[0], kAll[1]), ZeroPolynomial);
  // no real roots
  CHECK(count_roots(IntPoly{1, 0, 1}, kAll[0], kAll[1]) == 0);
  // constants
  CHECK(count_roots(IntPoly{5}, kAll[0], kAll[1]) == 0);
}

TEST_CASE("repeated roots are counted once and rejected by isolation") {
  IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1};  // (t-1)^2 (t+2)
  CHECK_FALSE(is_square_free(p));
  SturmChain chain(p);
  CHECK_FALSE(chain.input_square_free());
  CHECK(chain.square_free_part() == IntPoly{-1, 1} * IntPoly{2, 1});
  CHECK(count_roots(p, kAll[0], kAll[1]) == 2);
  CHECK_THROWS_AS(isolate_all(p), NotSquareFree);
  // The repeated root is outside this window, so isolation proceeds.
  auto l = isolate_roots(p, Endpoint::neg_inf(), Endpoint::open(Rational(0)), Rational(1, 8));
  REQUIRE(l.size() == 1);
  CHECK(l[0].exact());
  CHECK(l[0].lo == -2);
}

TEST_CASE("isolation of the P family matches reference roots") {
  const Rational tight(1, Integer("1000000000000000"));
  auto r5 = isolate_all(compute_p(5), tight);
  REQUIRE(r5.size() == 2);
  CHECK(doctest::Approx(r5[0].midpoint().get_d()).epsilon(1e-9) == (-5 - std::sqrt(21.0)) / 2);
  CHECK(doctest::Approx(r5[1].midpoint().get_d()).epsilon(1e-9) == (-5 + std::sqrt(21.0)) / 2);

  auto r6 = isolate_all(compute_p(6), tight);
  REQUIRE(r6.size() == 3);
  CHECK(r6[1].exact());
  CHECK(r6[1].lo == -1);
  CHECK(doctest::Approx(r6[0].midpoint().get_d()).epsilon(1e-11) == -14.9330343737);

  for (int n = 4; n <= 14; ++n) {
    CAPTURE(n);
    const IntPoly& p = compute_p(n);
    auto iso = isolate_all(p, Rational(1, 1 << 30));
    REQUIRE(static_cast<int>(iso.size()) == n - 3);
    CHECK(ordered_disjoint(iso));
    auto ref = oracle::real_roots(oracle::to_double(oracle::p_table(n)[static_cast<std::size_t>(n)]));
    REQUIRE(ref.size() == iso.size());
    for (std::size_t i = 0; i < iso.size(); ++i) {
      const double mid = iso[i].midpoint().get_d();
      CHECK(std::abs(mid - ref[i]) <= 1e-6 * std::max(1.0, std::abs(ref[i])));
      if (!iso[i].exact()) {
        CHECK(sign_at(p, iso[i].lo) * sign_at(p, iso[i].hi) == -1);
      }
    }
  }
}

TEST_CASE("random products of linear factors: every root found in its interval") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 9);
  std::uniform_int_distribution<int> extra(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<Rational> roots;
    const int want = 1 + trial % 7;
    while (static_cast<int>(roots.size()) < want) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      roots.insert(r);
    }
    IntPoly p{1};
    for (const auto& r : roots) p = p * IntPoly(std::vector<Integer>{-r.get_num(), r.get_den()});
    for (int k = extra(rng); k > 0; --k) p = p * IntPoly{1 + k, 0, 1};  // no real roots
    CAPTURE(to_string(p));
    auto iso = isolate_all(p, Rational(1, 1000));
    REQUIRE(iso.size() == roots.size());
    CHECK(ordered_disjoint(iso));
    std::size_t i = 0;
    for (const auto& r : roots) {
      CHECK(iso[i].contains(r));
      CHECK(iso[i].width() <= Rational(1, 1000));
      ++i;
    }
    // Any window agrees with a direct count of the known roots.
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (a > b) std::swap(a, b);
    if (a < b) {
      const int direct = static_cast<int>(std::count_if(roots.begin(), roots.end(),
                                                        [&](const Rational& r) { return a < r && r <= b; }));
      CHECK(count_roots(p, Endpoint::open(a), Endpoint::closed_at(b)) == direct);
    }
  }
}

TEST_CASE("refinement shrinks to the requested width with dyadic splits") {
  IntPoly p{-2, 0, 1};  // sqrt 2
  auto iso = isolate_roots(p, Endpoint::open(Rational(0)), Endpoint::pos_inf(), Rational(1));
  REQUIRE(iso.size() == 1);
  const Rational eps(1, Integer("1000000000000000000000000000000"));
  RootInterval fine = refine(p, iso[0], eps);
  CHECK(fine.width() <= eps);
  CHECK(fine.lo * fine.lo < 2);
  CHECK(fine.hi * fine.hi > 2);
  CHECK(is_dyadic(fine.lo));
  CHECK(is_dyadic(fine.hi));
  CHECK(doctest::Approx(fine.midpoint().get_d()) == std::sqrt(2.0));

  // Non-dyadic starting interval.
  RootInterval odd{Rational(4, 3), Rational(3, 2)};
  RootInterval r = refine(p, odd, Rational(1, 1000));
  CHECK(r.width() <= Rational(1, 1000));
  CHECK(r.contains(Rational(1414, 1000)) == false);
  CHECK(r.lo < Rational(14143, 10000));
  CHECK(r.hi > Rational(14142, 10000));
}

TEST_CASE("cauchy bound covers all roots") {
  CHECK(cauchy_bound(IntPoly{-6, 1}) == 8);
  for (int n = 4; n <= 20; ++n) {
    const Rational b = cauchy_bound(compute_p(n));
    CHECK(count_roots(compute_p(n), Endpoint::open(-b), Endpoint::open(b)) == n - 3);
  }
}

TEST_CASE("interlacing") {
  for (int n = 4; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(check_interlacing(compute_p(n), compute_p(n + 1)));
  }
  CHECK(check_interlacing(IntPoly{0, 1}, IntPoly{-1, 0, 1}));
  CHECK_FALSE(check_interlacing(IntPoly{-2, 1}, IntPoly{-1, 0, 1}));  // 2 lies outside (-1, 1)
  CHECK_FALSE(check_interlacing(IntPoly{0, 1}, IntPoly{0, -1, 1}));    // shared root 0
  CHECK_FALSE(check_interlacing(IntPoly{0, 1}, IntPoly{1, 0, 1}));     // no real roots
  CHECK_FALSE(check_interlacing(IntPoly{0, 1}, IntPoly{0, 1}));        // degree mismatch
  CHECK_THROWS_AS(check_interlacing(IntPoly{0, 1}, IntPoly{0, 0, 1}), NotSquareFree);
  // Roots 1e-12 apart still separate.
  const Integer big("1000000000000");
  IntPoly q = IntPoly{-1, 1} * IntPoly(std::vector<Integer>{-(big + 2), big}) * IntPoly{1, 1};  // 1, 1 + 2e-12, -1
  IntPoly p = IntPoly(std::vector<Integer>{-(big + 1), big}) * IntPoly{0, 1};                    // 1 + 1e-12, 0
  CHECK(check_interlacing(p, q));
}

TEST_CASE("certified sign at a root of another polynomial") {
  IntPoly p{-2, 0, 1};
  SturmChain chain(p);
  auto iso = isolate_roots(p, Endpoint::open(Rational(0)), Endpoint::pos_inf(), Rational(1));
  RootInterval iv = iso[0];
  // sign of t - 1.41421356 at sqrt 2 is positive, needs refinement first
  CHECK(certified_sign(chain, iv, IntPoly{-141421356, 100000000}) == 1);
  CHECK(iv.width() < Rational(1, 100000000));
  CHECK(certified_sign(chain, iv, IntPoly{}) == 0);
  RootInterval stuck = iso[0];
  CHECK_THROWS_AS(certified_sign(chain, stuck, IntPoly{-2, 0, 1}, 30), RefinementBudgetExceeded);
}
