#include "poincare/realroot.hpp"

#include <algorithm>
#include <stdexcept>

#include "poincare/errors.hpp"

namespace poincare {

namespace {

std::vector<IntPoly> build_chain(const IntPoly& p) {
  std::vector<IntPoly> chain{primitive_part(p)};
  IntPoly dp = primitive_part(derivative(p));
  if (dp.is_zero()) return chain;
  chain.push_back(std::move(dp));
  for (;;) {
    IntPoly r = pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(primitive_part(-r));
  }
  return chain;
}

int count_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational power_of_two(long k) {
  Integer p = 1;
  if (k >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  return Rational(Integer(1), p);
}

// A dyadic rational in the middle half of (a, b), with a denominator no
// larger than the interval width requires.
Rational dyadic_between(const Rational& a, const Rational& b) {
  const Rational w = b - a;
  const Rational target = 2 / w;  // want 2^k >= 2 / w
  long k = static_cast<long>(mpz_sizeinbase(target.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(target.get_den().get_mpz_t(), 2));
  while (power_of_two(k) < target) ++k;
  while (power_of_two(k - 1) >= target) --k;
  const Rational scale = power_of_two(k);
  const Rational start = (a + w / 4) * scale;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), start.get_num().get_mpz_t(), start.get_den().get_mpz_t());
  Rational d = Rational(c) / scale;
  d.canonicalize();
  return d;
}

// Roots of the chain's polynomial in the open interval (a, b).
int count_open(const SturmChain& chain, const Rational& a, const Rational& b) {
  return chain.count(Endpoint::open(a), Endpoint::open(b));
}

// Exactly one root of the chain's polynomial lies in the open interval
// (a, b). Shrinks until the width is at most `precision` and neither end is
// a root.
RootInterval refine_open(const SturmChain& chain, Rational a, Rational b, const Rational& precision) {
  const IntPoly& p = chain.square_free_part();
  int sa = sign_at(p, a);
  int sb = sign_at(p, b);
  while (b - a > precision || sa == 0 || sb == 0) {
    Rational m = dyadic_between(a, b);
    const int sm = sign_at(p, m);
    if (sm == 0) return {m, m};
    bool left;
    if (sa != 0 && sb != 0) {
      left = sa != sm;
    } else {
      left = count_open(chain, a, m) == 1;
    }
    if (left) {
      b = std::move(m);
      sb = sm;
    } else {
      a = std::move(m);
      sa = sm;
    }
  }
  return {a, b};
}

void split(const SturmChain& chain, const Rational& a, const Rational& b, int roots,
           const Rational& precision, IsolationList& out) {
  if (roots == 0) return;
  if (roots == 1) {
    out.push_back(refine_open(chain, a, b, precision));
    return;
  }
  Rational m = dyadic_between(a, b);
  const bool hit = sign_at(chain.square_free_part(), m) == 0;
  const int left = count_open(chain, a, m);
  split(chain, a, m, left, precision, out);
  if (hit) out.push_back({m, m});
  split(chain, m, b, roots - left - (hit ? 1 : 0), precision, out);
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
  chain_ = build_chain(p);
  if (chain_.back().degree() > 0) {
    input_square_free_ = false;
    IntPoly sqf = exact_div(chain_.front(), chain_.back());
    if (sgn(sqf.leading()) != sgn(p.leading())) sqf = -sqf;
    chain_ = build_chain(sqf);
  }
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign_at(q, x));
  return count_variations(signs);
}

int SturmChain::variations_at_infinity(bool positive) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign_at_infinity(q, positive));
  return count_variations(signs);
}

int SturmChain::count(const Endpoint& lo, const Endpoint& hi) const {
  const IntPoly& p = chain_.front();
  if (!lo.infinite() && !hi.infinite()) {
    if (*lo.value > *hi.value) throw std::invalid_argument("empty interval");
    if (*lo.value == *hi.value) {
      if (!lo.closed || !hi.closed) throw std::invalid_argument("empty interval");
      return sign_at(p, *lo.value) == 0 ? 1 : 0;
    }
  }
  // V(a) - V(b) counts roots in (a, b].
  const int v_lo = lo.infinite() ? variations_at_infinity(false) : variations_at(*lo.value);
  const int v_hi = hi.infinite() ? variations_at_infinity(true) : variations_at(*hi.value);
  int n = v_lo - v_hi;
  if (!lo.infinite() && lo.closed && sign_at(p, *lo.value) == 0) ++n;
  if (!hi.infinite() && !hi.closed && sign_at(p, *hi.value) == 0) --n;
  return n;
}

bool is_square_free(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("square-freeness of the zero polynomial");
  return gcd(p, derivative(p)).degree() <= 0;
}

int count_roots(const IntPoly& p, const Endpoint& lo, const Endpoint& hi) {
  return SturmChain(p).count(lo, hi);
}

Rational cauchy_bound(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("root bound of the zero polynomial");
  Integer max_lower = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Integer a = abs(p[static_cast<std::size_t>(i)]);
    if (a > max_lower) max_lower = a;
  }
  Integer lead = abs(p.leading());
  Integer ratio;
  mpz_cdiv_q(ratio.get_mpz_t(), max_lower.get_mpz_t(), lead.get_mpz_t());
  Integer bound = ratio + 1;
  Integer pow2 = 1;
  while (pow2 < bound) pow2 *= 2;
  return Rational(pow2);
}

IsolationList isolate_roots(const IntPoly& p, const Endpoint& lo, const Endpoint& hi,
                            const Rational& precision) {
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  SturmChain chain(p);
  if (!chain.input_square_free()) {
    IntPoly g = gcd(p, derivative(p));
    if (count_roots(g, lo, hi) > 0) {
      throw NotSquareFree("repeated root inside the isolation interval");
    }
  }
  const IntPoly& sqf = chain.square_free_part();
  const Rational bound = cauchy_bound(sqf);
  const Rational a = lo.infinite() ? Rational(-bound) : *lo.value;
  const Rational b = hi.infinite() ? bound : *hi.value;
  if (a > b) throw std::invalid_argument("empty interval");

  IsolationList out;
  const bool lo_root = !lo.infinite() && lo.closed && sign_at(sqf, a) == 0;
  const bool hi_root = !hi.infinite() && hi.closed && sign_at(sqf, b) == 0;
  if (a == b) {
    if (lo_root) out.push_back({a, a});
    return out;
  }
  if (lo_root) out.push_back({a, a});
  split(chain, a, b, count_open(chain, a, b), precision, out);
  if (hi_root) out.push_back({b, b});
  return out;
}

RootInterval refine(const SturmChain& chain, const RootInterval& iv, const Rational& precision) {
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  if (iv.exact()) return iv;
  const IntPoly& p = chain.square_free_part();
  if (sign_at(p, iv.lo) == 0) return {iv.lo, iv.lo};
  if (sign_at(p, iv.hi) == 0) return {iv.hi, iv.hi};
  return refine_open(chain, iv.lo, iv.hi, precision);
}

RootInterval refine(const IntPoly& p, const RootInterval& iv, const Rational& precision) {
  return refine(SturmChain(p), iv, precision);
}

bool check_interlacing(const IntPoly& p, const IntPoly& q, int max_rounds) {
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomial("interlacing with the zero polynomial");
  if (q.degree() != p.degree() + 1) return false;
  if (!is_square_free(p)) throw NotSquareFree("first polynomial has a repeated root");
  if (!is_square_free(q)) throw NotSquareFree("second polynomial has a repeated root");
  if (gcd(p, q).degree() > 0) return false;

  const SturmChain pc(p);
  const SturmChain qc(q);
  const auto all = [](const SturmChain& c) { return c.count(Endpoint::neg_inf(), Endpoint::pos_inf()); };
  if (all(pc) != p.degree() || all(qc) != q.degree()) return false;

  struct Tagged {
    RootInterval iv;
    bool from_q;
  };
  std::vector<Tagged> merged;
  const Rational coarse = std::max(cauchy_bound(p), cauchy_bound(q));
  for (auto& iv : isolate_roots(p, Endpoint::neg_inf(), Endpoint::pos_inf(), coarse)) merged.push_back({iv, false});
  for (auto& iv : isolate_roots(q, Endpoint::neg_inf(), Endpoint::pos_inf(), coarse)) merged.push_back({iv, true});

  auto by_position = [](const Tagged& a, const Tagged& b) {
    return a.iv.lo != b.iv.lo ? a.iv.lo < b.iv.lo : a.iv.hi < b.iv.hi;
  };
  for (int round = 0;; ++round) {
    std::sort(merged.begin(), merged.end(), by_position);
    std::vector<bool> crowded(merged.size(), false);
    bool any = false;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
      if (merged[i].iv.hi > merged[i + 1].iv.lo) {
        crowded[i] = crowded[i + 1] = true;
        any = true;
      }
    }
    if (!any) break;
    if (round >= max_rounds) throw RefinementBudgetExceeded("root intervals did not separate");
    for (std::size_t i = 0; i < merged.size(); ++i) {
      if (!crowded[i] || merged[i].iv.exact()) continue;
      const SturmChain& c = merged[i].from_q ? qc : pc;
      merged[i].iv = refine(c, merged[i].iv, merged[i].iv.width() / 2);
    }
  }
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (merged[i].from_q != (i % 2 == 0)) return false;
  }
  return true;
}

int certified_sign(const SturmChain& chain, RootInterval& iv, const IntPoly& other, int max_rounds) {
  if (other.is_zero()) return 0;
  const SturmChain oc(other);
  for (int round = 0;; ++round) {
    if (iv.exact()) return sign_at(other, iv.lo);
    if (oc.count(Endpoint::closed_at(iv.lo), Endpoint::closed_at(iv.hi)) == 0) {
      return sign_at(other, iv.midpoint());
    }
    if (round >= max_rounds) throw RefinementBudgetExceeded("sign of the second polynomial not settled");
    iv = refine(chain, iv, iv.width() / 2);
  }
}

}  // namespace poincare
