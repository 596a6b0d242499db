#include "poincare/identities.hpp"

#include <stdexcept>

#include "poincare/errors.hpp"

namespace poincare {

namespace {

const IntPoly kT{0, 1};
const IntPoly kOnePlusT{1, 1};
const IntPoly kA{1, -1};  // a = 1 - t

BiPoly const_y(const IntPoly& c) { return BiPoly(c); }

// y (y + t - 1)
BiPoly transport() { return BiPoly({IntPoly{}, IntPoly{-1, 1}, IntPoly{1}}); }

void require_order(int order, int lo) {
  if (order < lo) throw std::invalid_argument("series order must be at least " + std::to_string(lo));
}

Json mismatch(std::string_view what, int k) {
  Json w = reason(what);
  w["coefficient_index"] = k;
  return w;
}

// Falling factorial (s)(s - 1)...(s - k + 1) with s = t + shift.
IntPoly falling_factorial(int k, long shift) {
  IntPoly out{1};
  for (int j = 0; j < k; ++j) out = out * IntPoly{shift - j, 1};
  return out;
}

// Series divided coefficientwise by an integer; throws NotDivisible.
template <class C>
EgfSeries<C> divide(const EgfSeries<C>& s, long d) {
  return s.map([&](const C& c) { return exact_div(c, Integer(d)); });
}

// s^k / k! for k = 1..n, as EGF series with integer coefficients. Needs
// s_0 = 0, which makes every division exact.
template <class C>
std::vector<EgfSeries<C>> divided_powers(const EgfSeries<C>& s, int n) {
  std::vector<EgfSeries<C>> out;
  out.push_back(s);
  for (int k = 2; k <= n; ++k) out.push_back(divide(out.back() * s, k));
  return out;
}

}  // namespace

TSeries series_from_p(int order) {
  require_order(order, 0);
  TSeries u(order);
  for (int k = 2; k <= order; ++k) u[k] = compute_p(k + 1);
  return u;
}

YTSeries series_from_f(int order) {
  require_order(order, 0);
  YTSeries phi(order);
  for (int m = 1; m <= order; ++m) phi[m] = compute_f(m);
  return phi;
}

Verdict verify_u_ode(int order) {
  require_order(order, 3);
  return run_check("U-ode", order, [&](Verdict&) -> std::optional<Json> {
    const TSeries u = series_from_p(order);
    const TSeries du = u.derivative();
    const TSeries lhs = du - TSeries::x(du.order());
    const TSeries rhs = u.map([](const IntPoly& c) { return kOnePlusT * c; }) +
                        (u * du).map([](const IntPoly& c) { return kT * c; });
    if (int k = first_difference(lhs, rhs); k >= 0) return mismatch("U ODE fails", k);
    return std::nullopt;
  });
}

Verdict verify_u_product(int order) {
  require_order(order, 4);
  return run_check("U-product", order, [&](Verdict&) -> std::optional<Json> {
    const TSeries u = series_from_p(order);
    const TSeries prod = u * u.derivative();
    for (int n = 2; n <= order - 2; ++n) {
      if (prod[n] != compute_s(n + 2)) return mismatch("U dU/dx entry differs from S_{n+2}", n);
    }
    return std::nullopt;
  });
}

Verdict verify_phi_pde(int order) {
  require_order(order, 2);
  return run_check("Phi-pde", order, [&](Verdict&) -> std::optional<Json> {
    const YTSeries phi = series_from_f(order);
    const YTSeries dphi = phi.derivative();
    const BiPoly y_minus_1({IntPoly{-1}, IntPoly{1}});
    const BiPoly tr = transport();
    const YTSeries lhs = dphi - dphi.times_x().map([&](const BiPoly& c) { return y_minus_1 * c; }) -
                         phi.map([&](const BiPoly& c) { return tr * derivative_y(c); });
    YTSeries rhs = phi;
    rhs[0] += const_y(IntPoly{1});
    if (int k = first_difference(lhs, rhs); k >= 0) return mismatch("Phi PDE fails", k);
    return std::nullopt;
  });
}

Verdict verify_phi_y_slice(int order) {
  require_order(order, 2);
  return run_check("Phi-y-slice", order, [&](Verdict&) -> std::optional<Json> {
    const TSeries u = series_from_p(order);
    const TSeries rhs = u + u * u.derivative();
    TSeries lhs(order - 1);
    for (int k = 1; k <= lhs.order(); ++k) lhs[k] = slice_at_one(derivative_y(compute_f(k)));
    if (int k = first_difference(lhs, rhs); k >= 0) return mismatch("dPhi/dy at y = 1 differs", k);
    return std::nullopt;
  });
}

Verdict verify_slice_slope(int m) {
  if (m < 2) throw std::invalid_argument("slice identities need m >= 2");
  return run_check("slice-slope", m, [&](Verdict&) -> std::optional<Json> {
    const BiPoly& f = compute_f(m);
    if (slice_at_one(f) != compute_p(m + 1)) return reason("F_m(1, t) != P_{m+1}");
    if (slice_at_one(derivative_y(f)) != compute_p(m + 1) + compute_s(m + 2)) {
      return reason("dF_m/dy(1, t) != P_{m+1} + S_{m+2}");
    }
    return std::nullopt;
  });
}

Verdict verify_getzler_param(int order) {
  require_order(order, 2);
  return run_check("getzler-param", order, [&](Verdict&) -> std::optional<Json> {
    const int n = order;
    // t log(1 + w): entry k is t (-1)^(k+1) (k-1)!
    TSeries tlog(n);
    for (int k = 1; k <= n; ++k) {
      Integer c = factorial(static_cast<unsigned>(k - 1));
      if (k % 2 == 0) c = -c;
      tlog[k] = IntPoly::monomial(c, 1);
    }
    // z^t = exp(t log(1 + w)) from E' = (t log(1 + w))' E
    TSeries zt(n);
    zt[0] = IntPoly{1};
    for (int m = 0; m < n; ++m) {
      IntPoly sum;
      for (int k = 0; k <= m; ++k) {
        sum += (tlog[k + 1] * zt[m - k]) * binomial(static_cast<unsigned>(m), static_cast<unsigned>(k));
      }
      zt[m + 1] = std::move(sum);
    }
    for (int k = 0; k <= n; ++k) {
      if (zt[k] != falling_factorial(k, 0)) return mismatch("exp(t log(1 + w)) is not (1 + w)^t", k);
    }

    // x(w) = (t^2 w - (z^t - 1)) / (t (t - 1))
    const IntPoly tt1{0, -1, 1};
    TSeries xw(n);
    try {
      xw[1] = exact_div(IntPoly{0, 0, 1} - zt[1], tt1);
      for (int k = 2; k <= n; ++k) xw[k] = exact_div(-zt[k], tt1);
    } catch (const NotDivisible&) {
      return reason("t (t - 1) does not divide the numerator");
    }
    if (xw[1] != IntPoly{1}) throw NonInvertibleSeries("linear coefficient of x(w) is not 1");

    // Invert by fixed-point iteration w <- w - (x(w) - x); each pass fixes
    // at least one more order.
    const TSeries x = TSeries::x(n);
    TSeries w = x;
    for (int pass = 0; pass < n; ++pass) {
      const auto powers = divided_powers(w, n);
      TSeries composed(n);
      for (int k = 1; k <= n; ++k) {
        const TSeries& pk = powers[static_cast<std::size_t>(k - 1)];
        for (int j = 0; j <= n; ++j) composed[j] += xw[k] * pk[j];
      }
      const TSeries next = w - (composed - x);
      if (agree(next, w)) break;
      w = next;
    }
    const TSeries expected = x + series_from_p(n);
    if (int k = first_difference(w, expected); k >= 0) return mismatch("inverted series differs from x + U", k);

    // Direct substitution: t (t - 1) x = t^2 phi - ((1 + phi)^t - 1).
    const auto powers = divided_powers(expected, n);
    TSeries rhs = expected.map([](const IntPoly& c) { return IntPoly{0, 0, 1} * c; });
    for (int k = 1; k <= n; ++k) {
      const IntPoly ff = falling_factorial(k, 0);
      const TSeries& pk = powers[static_cast<std::size_t>(k - 1)];
      for (int j = 0; j <= n; ++j) rhs[j] -= ff * pk[j];
    }
    const TSeries lhs = x.map([&](const IntPoly& c) { return tt1 * c; });
    if (int k = first_difference(lhs, rhs); k >= 0) return mismatch("cleared parametrization fails at x + U", k);
    return std::nullopt;
  });
}

Verdict verify_psi_power(int order) {
  require_order(order, 1);
  return run_check("psi-power", order, [&](Verdict&) -> std::optional<Json> {
    const int n = order;
    const YTSeries phi = series_from_f(n);
    std::vector<YTSeries> powers;
    try {
      powers = divided_powers(phi, n);
    } catch (const NotDivisible&) {
      return reason("Phi^k / k! is not integral");
    }
    // binom(t + 1, k) Phi^k = (t + 1) t ... (t - k + 2) * (Phi^k / k!)
    for (int j = 1; j <= n; ++j) {
      BiPoly ftilde;
      for (int k = 1; k <= j; ++k) {
        ftilde += powers[static_cast<std::size_t>(k - 1)][j] * falling_factorial(k, 1);
      }
      if (slice_at_one(ftilde) != compute_ptilde(j)) return mismatch("Ftilde_n(1, t) != Ptilde_n", j);
      BiPoly quotient;
      try {
        quotient = exact_div(ftilde, kOnePlusT);
      } catch (const NotDivisible&) {
        return mismatch("t + 1 does not divide Ftilde_n", j);
      }
      if (quotient != compute_fhat(j)) return mismatch("Ftilde_n / (t + 1) != Fhat_n", j);
    }
    return std::nullopt;
  });
}

WeightSpec weight_spec(Deformation family, int index) {
  if (index < 1) throw std::invalid_argument("weight index must be >= 1");
  const long k = index;
  if (family == Deformation::F) return {family, index, IntPoly{k - 1}, IntPoly{1, -k}};
  // n + a - 2 = (n - 1) - t;  (n - 1) a - n + 2 = 1 - (n - 1) t
  return {family, index, IntPoly{k - 1, -1}, IntPoly{1, -(k - 1)}};
}

Verdict verify_weight_identity(Deformation family, int index) {
  const WeightSpec spec = weight_spec(family, index);
  const std::string claim = family == Deformation::F ? "F-weight" : "Fhat-weight";
  return run_check(claim, index, [&](Verdict&) -> std::optional<Json> {
    const long k = index;
    const BiPoly y = BiPoly::y();
    const BiPoly a_minus_y({kA, IntPoly{-1}});
    const BiPoly linear = family == Deformation::F ? BiPoly({IntPoly{1 - k}, IntPoly{k}})
                                                   : BiPoly({IntPoly{1 - k, 1}, IntPoly{k}});
    const BiPoly log_derivative = const_y(spec.alpha_num) * a_minus_y - const_y(spec.beta_num) * y;
    if (log_derivative != -(linear * kA)) return reason("alpha (a - y) - beta y != -(linear factor)");

    const BiPoly& f = family == Deformation::F ? compute_f(index) : compute_fhat(index);
    const BiPoly& next = family == Deformation::F ? compute_f(index + 1) : compute_fhat(index + 1);
    const BiPoly stepped = family == Deformation::F ? f_step(f, index) : fhat_step(f, index);
    if (stepped != next) return reason("recurrence does not reproduce the next member");

    const BiPoly lhs = (y * a_minus_y * derivative_y(f)) * kA + log_derivative * f;
    if (lhs != -(next * kA)) return reason("cleared weight identity fails");
    return std::nullopt;
  });
}

Verdict verify_g_limit_identity(int m) {
  if (m < 1) throw std::invalid_argument("G identity needs m >= 1");
  return run_check("G-limit", m, [&](Verdict&) -> std::optional<Json> {
    IntPoly v{1};
    for (int k = 0; k < m; ++k) v = v * IntPoly{1, 1};
    const IntPoly lhs = IntPoly{0, 1, 1} * derivative(v * compute_g(m));
    if (lhs != v * compute_g(m + 1)) return reason("x (1 + x) [(1 + x)^m G_m]' != (1 + x)^m G_{m+1}");
    return std::nullopt;
  });
}

}  // namespace poincare
