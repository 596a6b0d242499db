#pragma once

// Exact yes/no checks of real-rootedness, interlacing, log-concavity and root
// location for the polynomial families. No floating point enters a verdict.

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poincare/exact.hpp"
#include "poincare/io.hpp"

namespace poincare {

struct Verdict {
  std::string claim;
  int index = 0;
  bool pass = false;
  /// Present whenever pass is false; an object with at least "reason".
  std::optional<Json> witness;
  /// Extra parameters of the instance (e.g. the t value), if any.
  std::optional<Json> details;
  double millis = 0;
  /// Reported but not counted toward the overall result.
  bool informational = false;
};

/// {claim, index, pass, witness?, details?, informational?, millis}
Json to_json(const Verdict& v);

/// Times `body` and packages the result. `body` returns the witness, or
/// nullopt when the claim holds.
template <class Body>
Verdict run_check(std::string claim, int index, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  v.claim = std::move(claim);
  v.index = index;
  std::optional<Json> witness = body(v);
  v.pass = !witness.has_value();
  v.witness = std::move(witness);
  v.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

/// Witness helper: {"reason": reason}.
Json reason(std::string_view why);

/// p square-free with exactly `expected` real roots, all strictly negative.
Verdict verify_real_rooted(const IntPoly& p, int expected, std::string claim = "real-rooted",
                           int index = 0);

/// P_n real-rooted with n - 3 negative roots.
Verdict verify_p_real_rooted(int n);

/// (1 + t) divides Ptilde_n exactly and Phat_n has n - 1 simple negative roots.
Verdict verify_fm_real_rooted(int n);

/// Roots of P_{n+1} strictly interlace those of P_n. n = 3 passes when P_4
/// has its single root negative (P_3 is constant).
Verdict verify_interlacing(int n);

/// Margins (a_i / C_i^r)^2 - (a_{i-1} / C_{i-1}^r)(a_{i+1} / C_{i+1}^r) with
/// C_i = binom(len - 1, i), for 1 <= i <= len - 2.
struct UlcReport {
  std::string label;
  int r = 0;
  std::vector<Rational> margins;

  bool pass() const;
  /// Index i of the first negative margin.
  std::optional<int> first_violation() const;
};

/// Throws std::invalid_argument for a nonpositive entry or r < 0.
UlcReport verify_rulc(std::span<const Integer> coeffs, int r, std::string label = {});

/// Wraps a report as a verdict; the witness names the first bad index and
/// its margin.
Verdict ulc_verdict(const UlcReport& report, std::string claim, int index, bool informational = false);

Verdict verify_palindrome_unimodal(std::span<const Integer> coeffs,
                                   std::string claim = "palindrome-unimodal", int index = 0);

/// F_m(., t0): simple root at 0, m - 2 simple roots in (0, 1 - t0), none
/// elsewhere. Requires m >= 2, t0 < 0.
Verdict verify_root_location(int m, const Rational& t0);

/// Fhat_n(., t0): n - 1 simple roots, all in (0, 1 - t0). Requires n >= 2, t0 < 0.
Verdict verify_fhat_root_location(int n, const Rational& t0);

/// At each root tau_i of P_n (d = n - 3 of them, ascending), S_{n+1} has sign
/// (-1)^(d-i) and P_{n+1} = tau_i S_{n+1}(tau_i) has the opposite sign; also
/// checks P_{n+1} - t S_{n+1} = (1 + t) P_n. Signs are certified by refining
/// each root interval until the other polynomial has no root in it.
/// Requires n >= 4. May throw RefinementBudgetExceeded.
Verdict verify_sign_alternation(int n);

/// G_m: simple root at 0 and m - 2 simple roots in (-1, 0), nothing else.
Verdict verify_g_roots(int m);

/// K_n: simple root at -1 and n - 2 simple roots in (-1, 0), nothing else.
Verdict verify_k_roots(int n);

}  // namespace poincare
