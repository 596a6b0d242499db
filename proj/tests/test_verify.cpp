#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "poincare/recurrences.hpp"
#include "poincare/verify.hpp"

using namespace poincare;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Integer> coeffs(const IntPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("real-rootedness verdicts") {
  CHECK(verify_real_rooted(compute_p(6), 3).pass);
  Verdict double_root = verify_real_rooted(compute_ptilde(2), 2);
  CHECK_FALSE(double_root.pass);
  REQUIRE(double_root.witness);
  CHECK((*double_root.witness)["reason"] == "not square-free");
  CHECK(verify_real_rooted(compute_phat(2), 1).pass);
  // x^2 + 1: no real roots
  CHECK_FALSE(verify_real_rooted(IntPoly{1, 0, 1}, 2).pass);
  // t - 1: a positive root
  Verdict positive = verify_real_rooted(IntPoly{-1, 1}, 1);
  CHECK_FALSE(positive.pass);
  CHECK((*positive.witness)["reason"] == "root in [0, +inf)");
  // t itself: root at 0 is not strictly negative
  CHECK_FALSE(verify_real_rooted(IntPoly{0, 1}, 1).pass);

  for (int n = 4; n <= 25; ++n) CHECK(verify_p_real_rooted(n).pass);
  for (int n = 1; n <= 20; ++n) CHECK(verify_fm_real_rooted(n).pass);
}

TEST_CASE("verdict JSON shape") {
  Verdict ok = verify_p_real_rooted(5);
  Json j = to_json(ok);
  CHECK(j["claim"] == "P-real-rooted");
  CHECK(j["index"] == 5);
  CHECK(j["pass"] == true);
  CHECK_FALSE(j.contains("witness"));
  CHECK(j.contains("millis"));
  Verdict bad = verify_real_rooted(compute_ptilde(2), 2, "x", 2);
  Json jb = to_json(bad);
  CHECK(jb["pass"] == false);
  CHECK(jb["witness"]["reason"] == "not square-free");
}

TEST_CASE("interlacing verdicts") {
  CHECK(verify_interlacing(3).pass);
  for (int n = 4; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(verify_interlacing(n).pass);
  }
  CHECK_THROWS_AS(verify_interlacing(2), std::invalid_argument);
}

TEST_CASE("r-ULC margins") {
  auto b6 = ints({1, 16, 16, 1});
  UlcReport r1 = verify_rulc(b6, 1, "P_6");
  CHECK(r1.pass());
  REQUIRE(r1.margins.size() == 2);
  // (16/3)^2 - (1)(16/3)
  CHECK(r1.margins[0] == q(256, 9) - q(16, 3));

  CHECK(verify_rulc(ints({1, 42, 127, 42, 1}), 2).pass());
  UlcReport flat = verify_rulc(ints({1, 1, 1}), 0);
  CHECK(flat.pass());
  CHECK(flat.margins == std::vector<Rational>{Rational(0)});
  CHECK(verify_rulc(ints({1, 1}), 3).margins.empty());

  // Not log-concave: 1, 1, 5
  UlcReport bad = verify_rulc(ints({1, 1, 5}), 0);
  CHECK_FALSE(bad.pass());
  CHECK(bad.first_violation() == 1);
  Verdict v = ulc_verdict(bad, "ulc", 0);
  CHECK_FALSE(v.pass);
  CHECK((*v.witness)["coefficient_index"] == 1);
  CHECK((*v.witness)["margin"] == "-4/1");

  CHECK_THROWS_AS(verify_rulc(ints({1, 0, 1}), 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_rulc(ints({1, 2, 1}), -1), std::invalid_argument);
}

TEST_CASE("r-ULC margins agree with floating-point recomputation") {
  for (int n = 5; n <= 14; ++n) {
    const auto c = coeffs(compute_p(n));
    for (int r = 0; r <= 4; ++r) {
      UlcReport rep = verify_rulc(c, r);
      const int len = static_cast<int>(c.size());
      for (int i = 1; i + 1 < len; ++i) {
        auto scaled = [&](int k) {
          return c[static_cast<std::size_t>(k)].get_d() / std::pow(static_cast<double>(oracle::choose(len - 1, k)), r);
        };
        const double ref = scaled(i) * scaled(i) - scaled(i - 1) * scaled(i + 1);
        const double got = rep.margins[static_cast<std::size_t>(i - 1)].get_d();
        CHECK(got == doctest::Approx(ref).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("ULC statuses of P_n and Ptilde_n") {
  for (int n = 3; n <= 25; ++n) {
    CAPTURE(n);
    const auto c = coeffs(compute_p(n));
    CHECK(verify_rulc(c, 1).pass());
    CHECK(verify_rulc(c, 2).pass());
  }
  for (int n = 1; n <= 25; ++n) CHECK(verify_rulc(coeffs(compute_ptilde(n)), 1).pass());
  // 3-ULC fails for n = 5..9 and 4-ULC fails from n = 5 on.
  for (int n = 5; n <= 9; ++n) CHECK_FALSE(verify_rulc(coeffs(compute_p(n)), 3).pass());
  for (int n = 5; n <= 25; ++n) CHECK_FALSE(verify_rulc(coeffs(compute_p(n)), 4).pass());
  // monotone in r
  for (int n = 3; n <= 25; ++n) {
    const auto c = coeffs(compute_p(n));
    for (int r = 1; r <= 4; ++r) {
      if (verify_rulc(c, r).pass()) CHECK(verify_rulc(c, r - 1).pass());
    }
  }
}

TEST_CASE("palindromic and unimodal") {
  CHECK(verify_palindrome_unimodal(ints({1, 16, 16, 1})).pass);
  CHECK(verify_palindrome_unimodal(ints({1, 2, 1})).pass);
  Verdict v = verify_palindrome_unimodal(ints({1, 3, 2}));
  CHECK_FALSE(v.pass);
  CHECK((*v.witness)["reason"] == "not palindromic");
  Verdict w = verify_palindrome_unimodal(ints({2, 1, 2}));
  CHECK_FALSE(w.pass);
  CHECK((*w.witness)["reason"] == "not unimodal");
  CHECK(verify_palindrome_unimodal(ints({4})).pass);
}

TEST_CASE("root location of F and Fhat") {
  CHECK(verify_root_location(4, Rational(-1)).pass);
  CHECK(verify_root_location(2, q(-1, 2)).pass);
  CHECK(verify_root_location(6, Rational(-3)).pass);
  CHECK(verify_fhat_root_location(2, Rational(-1)).pass);
  CHECK(verify_fhat_root_location(2, q(-1, 2)).pass);
  CHECK(verify_fhat_root_location(3, Rational(-2)).pass);
  for (int m = 2; m <= 12; ++m) {
    for (const Rational& t0 : {q(-1, 2), Rational(-1), Rational(-3), Rational(-10), q(-97, 3)}) {
      CAPTURE(m);
      CHECK(verify_root_location(m, t0).pass);
      CHECK(verify_fhat_root_location(m, t0).pass);
    }
  }
  CHECK_THROWS_AS(verify_root_location(4, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(verify_root_location(1, Rational(-1)), std::invalid_argument);
}

TEST_CASE("root location numbers agree with eigenvalue roots") {
  // F_6(y, -3): 0, 0.2503642, 1.0192263, 2.1370327, 3.2600434
  const IntPoly q6 = clear_denominators(eval_t(compute_f(6), Rational(-3)));
  std::vector<double> c;
  for (const auto& x : q6.coeffs()) c.push_back(x.get_d());
  auto roots = oracle::real_roots(c);
  REQUIRE(roots.size() == 5);
  CHECK(roots[0] == doctest::Approx(0.0));
  CHECK(roots[1] == doctest::Approx(0.2503642).epsilon(1e-6));
  CHECK(roots[4] == doctest::Approx(3.2600434).epsilon(1e-6));
  CHECK(roots[4] < 4.0);
}

TEST_CASE("sign alternation") {
  for (int n = 4; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(verify_sign_alternation(n).pass);
  }
  CHECK_THROWS_AS(verify_sign_alternation(3), std::invalid_argument);
}

TEST_CASE("sign alternation agrees with numeric substitution at n = 5") {
  // P_6 at the roots of P_5 reads (+, -) from left to right.
  const double r1 = (-5 - std::sqrt(21.0)) / 2;
  const double r2 = (-5 + std::sqrt(21.0)) / 2;
  auto p6 = [](double t) { return 1 + 16 * t + 16 * t * t + t * t * t; };
  CHECK(p6(r1) > 0);
  CHECK(p6(r2) < 0);
  CHECK(verify_sign_alternation(5).pass);
}

TEST_CASE("G and K root structure") {
  for (int m = 2; m <= 12; ++m) {
    CAPTURE(m);
    CHECK(verify_g_roots(m).pass);
    CHECK(verify_k_roots(m).pass);
  }
  // G_4 = 15x^3 + 10x^2 + x: roots 0, -0.1225, -0.5442
  auto roots = oracle::real_roots({0, 1, 10, 15});
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == doctest::Approx(-0.544151844));
  CHECK(roots[1] == doctest::Approx(-0.122514823));
}
