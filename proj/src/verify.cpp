#include "poincare/verify.hpp"

#include <stdexcept>

#include "poincare/errors.hpp"
#include "poincare/realroot.hpp"
#include "poincare/recurrences.hpp"

namespace poincare {

namespace {

Json interval_json(const RootInterval& iv) {
  return {{"lo", to_fraction_string(iv.lo)}, {"hi", to_fraction_string(iv.hi)}};
}

// F(., t0) as an integer polynomial in y with the same roots and signs.
IntPoly specialize(const BiPoly& f, const Rational& t0) { return clear_denominators(eval_t(f, t0)); }

void require_negative(const Rational& t0) {
  if (t0 >= 0) throw std::invalid_argument("t must be negative");
}

}  // namespace

Json reason(std::string_view why) { return {{"reason", std::string(why)}}; }

Json to_json(const Verdict& v) {
  Json j{{"claim", v.claim}, {"index", v.index}, {"pass", v.pass}};
  if (v.witness) j["witness"] = *v.witness;
  if (v.details) j["details"] = *v.details;
  if (v.informational) j["informational"] = true;
  j["millis"] = v.millis;
  return j;
}

Verdict verify_real_rooted(const IntPoly& p, int expected, std::string claim, int index) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  return run_check(std::move(claim), index, [&](Verdict&) -> std::optional<Json> {
    if (!is_square_free(p)) return reason("not square-free");
    const int real = count_roots(p, Endpoint::neg_inf(), Endpoint::pos_inf());
    if (real != expected) {
      Json w = reason("wrong number of real roots");
      w["real_roots"] = real;
      w["expected"] = expected;
      return w;
    }
    const int nonneg = count_roots(p, Endpoint::closed_at(Rational(0)), Endpoint::pos_inf());
    if (nonneg != 0) {
      Json w = reason("root in [0, +inf)");
      w["count"] = nonneg;
      return w;
    }
    return std::nullopt;
  });
}

Verdict verify_p_real_rooted(int n) {
  if (n < 4) throw std::invalid_argument("P real-rootedness needs n >= 4");
  return verify_real_rooted(compute_p(n), n - 3, "P-real-rooted", n);
}

Verdict verify_fm_real_rooted(int n) {
  if (n < 1) throw std::invalid_argument("Ptilde needs n >= 1");
  return run_check("Ptilde-real-rooted", n, [&](Verdict&) -> std::optional<Json> {
    IntPoly quotient;
    try {
      quotient = exact_div(compute_ptilde(n), IntPoly{1, 1});
    } catch (const NotDivisible&) {
      return reason("1 + t does not divide Ptilde");
    }
    if (quotient != compute_phat(n)) return reason("quotient differs from Phat");
    Verdict inner = verify_real_rooted(quotient, n - 1);
    return inner.witness;
  });
}

Verdict verify_interlacing(int n) {
  if (n < 3) throw std::invalid_argument("interlacing needs n >= 3");
  return run_check("interlacing", n, [&](Verdict&) -> std::optional<Json> {
    if (n == 3) {
      const IntPoly& p4 = compute_p(4);
      if (count_roots(p4, Endpoint::neg_inf(), Endpoint::open(Rational(0))) != 1) {
        return reason("P_4 root not negative");
      }
      return std::nullopt;
    }
    if (!check_interlacing(compute_p(n), compute_p(n + 1))) return reason("roots do not interlace");
    return std::nullopt;
  });
}

bool UlcReport::pass() const { return !first_violation().has_value(); }

std::optional<int> UlcReport::first_violation() const {
  for (std::size_t k = 0; k < margins.size(); ++k) {
    if (margins[k] < 0) return static_cast<int>(k) + 1;
  }
  return std::nullopt;
}

UlcReport verify_rulc(std::span<const Integer> coeffs, int r, std::string label) {
  if (r < 0) throw std::invalid_argument("r must be non-negative");
  for (const auto& c : coeffs) {
    if (c <= 0) throw std::invalid_argument("r-ULC needs a positive sequence");
  }
  UlcReport report{std::move(label), r, {}};
  if (coeffs.size() < 3) return report;
  const unsigned n = static_cast<unsigned>(coeffs.size() - 1);
  std::vector<Rational> scaled;
  scaled.reserve(coeffs.size());
  for (unsigned i = 0; i <= n; ++i) {
    Integer c = 1;
    const Integer b = binomial(n, i);
    for (int k = 0; k < r; ++k) c *= b;
    Rational q(coeffs[i], c);
    q.canonicalize();
    scaled.push_back(q);
  }
  for (unsigned i = 1; i + 1 <= n; ++i) {
    report.margins.push_back(scaled[i] * scaled[i] - scaled[i - 1] * scaled[i + 1]);
  }
  return report;
}

Verdict ulc_verdict(const UlcReport& report, std::string claim, int index, bool informational) {
  Verdict v = run_check(std::move(claim), index, [&](Verdict& out) -> std::optional<Json> {
    out.details = Json{{"r", report.r}};
    if (!report.label.empty()) (*out.details)["sequence"] = report.label;
    if (auto bad = report.first_violation()) {
      Json w = reason("negative margin");
      w["coefficient_index"] = *bad;
      w["margin"] = to_fraction_string(report.margins[static_cast<std::size_t>(*bad - 1)]);
      return w;
    }
    return std::nullopt;
  });
  v.informational = informational;
  return v;
}

Verdict verify_palindrome_unimodal(std::span<const Integer> coeffs, std::string claim, int index) {
  if (coeffs.empty()) throw std::invalid_argument("empty sequence");
  return run_check(std::move(claim), index, [&](Verdict&) -> std::optional<Json> {
    const std::size_t n = coeffs.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (coeffs[i] != coeffs[n - 1 - i]) {
        Json w = reason("not palindromic");
        w["coefficient_index"] = i;
        return w;
      }
    }
    std::size_t i = 1;
    while (i < n && coeffs[i] >= coeffs[i - 1]) ++i;
    while (i < n && coeffs[i] <= coeffs[i - 1]) ++i;
    if (i < n) {
      Json w = reason("not unimodal");
      w["coefficient_index"] = i;
      return w;
    }
    return std::nullopt;
  });
}

Verdict verify_root_location(int m, const Rational& t0) {
  if (m < 2) throw std::invalid_argument("root location needs m >= 2");
  require_negative(t0);
  return run_check("F-root-location", m, [&](Verdict& v) -> std::optional<Json> {
    v.details = Json{{"t", to_fraction_string(t0)}};
    const IntPoly q = specialize(compute_f(m), t0);
    const Rational edge = 1 - t0;
    if (sign_at(q, Rational(0)) != 0) return reason("y = 0 is not a root");
    if (!is_square_free(q)) return reason("not square-free");
    const SturmChain chain(q);
    const int inside = chain.count(Endpoint::open(Rational(0)), Endpoint::open(edge));
    if (inside != m - 2) {
      Json w = reason("wrong number of roots in (0, 1 - t)");
      w["count"] = inside;
      w["expected"] = m - 2;
      return w;
    }
    if (int above = chain.count(Endpoint::closed_at(edge), Endpoint::pos_inf()); above != 0) {
      Json w = reason("root in [1 - t, +inf)");
      w["count"] = above;
      return w;
    }
    if (int below = chain.count(Endpoint::neg_inf(), Endpoint::open(Rational(0))); below != 0) {
      Json w = reason("negative root");
      w["count"] = below;
      return w;
    }
    return std::nullopt;
  });
}

Verdict verify_fhat_root_location(int n, const Rational& t0) {
  if (n < 2) throw std::invalid_argument("root location needs n >= 2");
  require_negative(t0);
  return run_check("Fhat-root-location", n, [&](Verdict& v) -> std::optional<Json> {
    v.details = Json{{"t", to_fraction_string(t0)}};
    const IntPoly q = specialize(compute_fhat(n), t0);
    if (!is_square_free(q)) return reason("not square-free");
    const SturmChain chain(q);
    const int inside = chain.count(Endpoint::open(Rational(0)), Endpoint::open(1 - t0));
    const int total = chain.count(Endpoint::neg_inf(), Endpoint::pos_inf());
    if (inside != n - 1 || total != n - 1) {
      Json w = reason("roots outside (0, 1 - t) or wrong count");
      w["inside"] = inside;
      w["total"] = total;
      w["expected"] = n - 1;
      return w;
    }
    return std::nullopt;
  });
}

Verdict verify_sign_alternation(int n) {
  if (n < 4) throw std::invalid_argument("sign alternation needs n >= 4");
  return run_check("sign-alternation", n, [&](Verdict&) -> std::optional<Json> {
    const IntPoly& p = compute_p(n);
    const IntPoly& s_next = compute_s(n + 1);
    const IntPoly& p_next = compute_p(n + 1);
    if (p_next - IntPoly{0, 1} * s_next != IntPoly{1, 1} * p) {
      return reason("P_{n+1} - t S_{n+1} != (1 + t) P_n");
    }
    const int d = n - 3;
    const SturmChain chain(p);
    IsolationList roots = isolate_roots(p, Endpoint::neg_inf(), Endpoint::pos_inf(), Rational(1));
    if (static_cast<int>(roots.size()) != d) return reason("P_n does not have n - 3 real roots");
    for (int i = 1; i <= d; ++i) {
      RootInterval& iv = roots[static_cast<std::size_t>(i - 1)];
      const int want = (d - i) % 2 == 0 ? 1 : -1;
      const int s_sign = certified_sign(chain, iv, s_next);
      const int p_sign = certified_sign(chain, iv, p_next);
      if (s_sign != want || p_sign != -want) {
        Json w = reason("sign pattern broken");
        w["root"] = i;
        w["tau"] = interval_json(iv);
        w["S_sign"] = s_sign;
        w["P_sign"] = p_sign;
        w["expected_S_sign"] = want;
        return w;
      }
    }
    return std::nullopt;
  });
}

Verdict verify_g_roots(int m) {
  if (m < 2) throw std::invalid_argument("G root structure needs m >= 2");
  return run_check("G-roots", m, [&](Verdict&) -> std::optional<Json> {
    const IntPoly& g = compute_g(m);
    if (!is_square_free(g)) return reason("not square-free");
    if (sign_at(g, Rational(0)) != 0) return reason("x = 0 is not a root");
    const SturmChain chain(g);
    const int inside = chain.count(Endpoint::open(Rational(-1)), Endpoint::open(Rational(0)));
    const int total = chain.count(Endpoint::neg_inf(), Endpoint::pos_inf());
    if (inside != m - 2 || total != m - 1) {
      Json w = reason("roots outside (-1, 0] or wrong count");
      w["inside"] = inside;
      w["total"] = total;
      return w;
    }
    return std::nullopt;
  });
}

Verdict verify_k_roots(int n) {
  if (n < 2) throw std::invalid_argument("K root structure needs n >= 2");
  return run_check("K-roots", n, [&](Verdict&) -> std::optional<Json> {
    const IntPoly& k = compute_k(n);
    if (!is_square_free(k)) return reason("not square-free");
    if (sign_at(k, Rational(-1)) != 0) return reason("x = -1 is not a root");
    const SturmChain chain(k);
    const int inside = chain.count(Endpoint::open(Rational(-1)), Endpoint::open(Rational(0)));
    const int total = chain.count(Endpoint::neg_inf(), Endpoint::pos_inf());
    if (inside != n - 2 || total != n - 1) {
      Json w = reason("roots outside [-1, 0) or wrong count");
      w["inside"] = inside;
      w["total"] = total;
      return w;
    }
    return std::nullopt;
  });
}

}  // namespace poincare
