#pragma once

// Coefficientwise certification of the generating-function, weight and
// limit identities satisfied by the families, to a chosen series order.
//
//   U(x, t)    = sum_{n>=3} P_n(t) x^(n-1) / (n-1)!
//   Phi(x,y,t) = sum_{m>=1} F_m(y, t) x^m / m!

#include "poincare/recurrences.hpp"
#include "poincare/series.hpp"
#include "poincare/verify.hpp"

namespace poincare {

/// U truncated at `order`: entry k is P_{k+1} for k >= 2, entries 0 and 1 vanish.
TSeries series_from_p(int order);

/// Phi truncated at `order`: entry m is F_m.
YTSeries series_from_f(int order);

/// d/dx U - x = (1 + t) U + t U dU/dx through order N - 1.
Verdict verify_u_ode(int order);

/// The x^n/n! entry of U dU/dx equals S_{n+2}, for 2 <= n <= order - 2.
Verdict verify_u_product(int order);

/// (1 - (y - 1) x) dPhi/dx - y (y + t - 1) dPhi/dy = 1 + Phi through order N - 1.
Verdict verify_phi_pde(int order);

/// dPhi/dy at y = 1 equals U + U dU/dx through order N - 1.
Verdict verify_phi_y_slice(int order);

/// F_m(1, t) = P_{m+1}(t) and dF_m/dy(1, t) = P_{m+1}(t) + S_{m+2}(t).
Verdict verify_slice_slope(int m);

/// The parametrization x = (t^2 (z - 1) - z^t + 1) / (t (t - 1)), with
/// w = z - 1, inverted as a series: w(x) = x + U(x, t) through `order`.
/// z^t = exp(t log(1 + w)) is expanded over Z[t]; every division by
/// t (t - 1) is exact. A second route substitutes w = x + U directly into
/// the cleared equation t (t - 1) x = t^2 w - (1 + w)^t + 1. Throws
/// NonInvertibleSeries if the linear coefficient of x(w) is not 1.
Verdict verify_getzler_param(int order);

/// (1 + Phi)^(t+1) = 1 + sum_n Ftilde_n x^n / n!: at y = 1 each Ftilde_n
/// equals Ptilde_n, and Ftilde_n = (t + 1) Fhat_n exactly, for n <= order.
Verdict verify_psi_power(int order);

/// Exponents of the weight w(y) = y^alpha (a - y)^beta, a = 1 - t, stored as
/// numerators over a:
///   F_m:    alpha = (m - 1) / a,          beta = (1 - m t) / a
///   Fhat_n: alpha = (n + a - 2) / a,      beta = ((n - 1) a - n + 2) / a
struct WeightSpec {
  Deformation family;
  int index;
  IntPoly alpha_num;  // in t
  IntPoly beta_num;   // in t
};

WeightSpec weight_spec(Deformation family, int index);

/// d/dy (w F_k) = -w / (y (a - y)) F_{k+1}, checked in cleared form
///   a y (a - y) F_k' + (alpha_num (a - y) - beta_num y) F_k = -a F_{k+1},
/// together with alpha (a - y) - beta y = -(linear factor of the recurrence)
/// and the recurrence step reproducing F_{k+1}.
Verdict verify_weight_identity(Deformation family, int index);

/// x (1 + x) [(1 + x)^m G_m]' = (1 + x)^m G_{m+1}.
Verdict verify_g_limit_identity(int m);

}  // namespace poincare
