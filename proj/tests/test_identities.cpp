#include "doctest.h"

#include "poincare/identities.hpp"

using namespace poincare;

TEST_CASE("series from P") {
  TSeries u3 = series_from_p(3);
  CHECK(u3[0].is_zero());
  CHECK(u3[1].is_zero());
  CHECK(u3[2] == IntPoly{1});
  CHECK(u3[3] == IntPoly{1, 1});
  CHECK(series_from_p(4)[4] == IntPoly{1, 5, 1});
  CHECK(series_from_p(2).order() == 2);
}

TEST_CASE("EGF products use binomial convolution") {
  // e^x e^x = e^{2x}
  TSeries e(6);
  for (int k = 0; k <= 6; ++k) e[k] = IntPoly{1};
  TSeries sq = e * e;
  for (int k = 0; k <= 6; ++k) CHECK(sq[k] == IntPoly::constant(Integer(1) << k));
  // x * x = 2 x^2/2!
  TSeries x2 = TSeries::x(4) * TSeries::x(4);
  CHECK(x2[2] == IntPoly{2});
  CHECK(x2[3].is_zero());
  // times_x of e^x is x e^x: entry k = k
  TSeries xe = e.times_x();
  CHECK(xe[3] == IntPoly{3});
  CHECK(e.derivative().order() == 5);
  // truncation to the shorter operand
  CHECK((e * TSeries::x(2)).order() == 2);
}

TEST_CASE("U dU/dx reproduces S") {
  TSeries u = series_from_p(15);
  TSeries prod = u * u.derivative();
  for (int n = 2; n <= 13; ++n) {
    CAPTURE(n);
    CHECK(prod[n] == compute_s(n + 2));
  }
  CHECK(verify_u_product(15).pass);
}

TEST_CASE("ODE and PDE") {
  for (int order : {3, 4, 6, 10, 15}) {
    CAPTURE(order);
    CHECK(verify_u_ode(order).pass);
  }
  for (int order : {2, 3, 5, 15}) {
    CAPTURE(order);
    CHECK(verify_phi_pde(order).pass);
  }
  CHECK(verify_phi_y_slice(15).pass);
  CHECK_THROWS_AS(verify_u_ode(2), std::invalid_argument);
}

TEST_CASE("slice and slope") {
  // F_3 = 3y^2 + (t - 2)y
  CHECK(compute_f(3) == BiPoly({IntPoly{}, IntPoly{-2, 1}, IntPoly{3}}));
  CHECK(slice_at_one(compute_f(3)) == IntPoly{1, 1});
  CHECK(slice_at_one(derivative_y(compute_f(3))) == IntPoly{4, 1});
  for (int m = 2; m <= 15; ++m) CHECK(verify_slice_slope(m).pass);
}

TEST_CASE("parametrization inverts to x + U") {
  for (int order : {2, 4, 6, 10}) {
    CAPTURE(order);
    CHECK(verify_getzler_param(order).pass);
  }
}

TEST_CASE("psi power and Fhat") {
  for (int order = 1; order <= 12; ++order) {
    CAPTURE(order);
    CHECK(verify_psi_power(order).pass);
  }
  // Fhat_2 = y + t
  CHECK(compute_fhat(2) == BiPoly({IntPoly{0, 1}, IntPoly{1}}));
}

TEST_CASE("weights") {
  WeightSpec f2 = weight_spec(Deformation::F, 2);
  CHECK(f2.alpha_num == IntPoly{1});
  CHECK(f2.beta_num == IntPoly{1, -2});
  WeightSpec h3 = weight_spec(Deformation::Fhat, 3);
  // alpha_3 a = a + 1 = 2 - t
  CHECK(h3.alpha_num == IntPoly{2, -1});
  for (int k = 1; k <= 12; ++k) {
    CAPTURE(k);
    CHECK(verify_weight_identity(Deformation::F, k).pass);
    CHECK(verify_weight_identity(Deformation::Fhat, k).pass);
  }
}

TEST_CASE("G limit identity") {
  for (int m = 1; m <= 12; ++m) CHECK(verify_g_limit_identity(m).pass);
}

TEST_CASE("the U relation detects a corrupted coefficient") {
  auto holds = [](const TSeries& u) {
    const TSeries du = u.derivative();
    const TSeries lhs = du - TSeries::x(du.order());
    const TSeries rhs = u.map([](const IntPoly& c) { return IntPoly{1, 1} * c; }) +
                        (u * du).map([](const IntPoly& c) { return IntPoly{0, 1} * c; });
    return first_difference(lhs, rhs);
  };
  TSeries u = series_from_p(10);
  CHECK(holds(u) == -1);
  u[6] = u[6] + IntPoly{0, 0, 1};
  // entry 6 first shows up in the coefficient of x^5/5!
  CHECK(holds(u) == 5);
}

TEST_CASE("series identities are stable under order extension") {
  const TSeries small = series_from_p(8);
  const TSeries big = series_from_p(12);
  CHECK(agree(small, big));
  CHECK(agree(small * small.derivative(), (big * big.derivative()).truncated(7)));
  const YTSeries phi8 = series_from_f(8);
  const YTSeries phi12 = series_from_f(12);
  CHECK(agree(phi8 * phi8, phi12 * phi12));
}
