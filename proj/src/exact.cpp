#include "poincare/exact.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <utility>

#include "poincare/errors.hpp"

namespace poincare {

namespace {

std::mutex pascal_mutex;
std::deque<std::vector<Integer>> pascal_rows{{Integer(1)}};

Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("not a number: '" + std::string(whole) + "'");
  }
  return Integer(std::string(digits), 10);
}

// Term "c*var^k" for to_string; `first` suppresses the leading " + ".
void append_term(std::ostringstream& out, const std::string& coeff, bool negative,
                 std::size_t power, std::string_view var, bool first) {
  if (first) {
    if (negative) out << '-';
  } else {
    out << (negative ? " - " : " + ");
  }
  if (power == 0) {
    out << coeff;
    return;
  }
  if (coeff != "1") out << coeff;
  out << var;
  if (power > 1) out << '^' << power;
}

}  // namespace

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::lock_guard lock(pascal_mutex);
  while (pascal_rows.size() <= n) {
    const auto& prev = pascal_rows.back();
    std::vector<Integer> row(prev.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
    pascal_rows.push_back(std::move(row));
  }
  return pascal_rows[n][k];
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer double_factorial_odd(unsigned m) {
  Integer r = 1;
  for (unsigned k = 3; k + 3 <= 2 * m; k += 2) r *= k;
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      Integer magnitude = parse_integer(exp_part, text);
      if (magnitude > 10000) throw ParseError("exponent out of range: '" + std::string(text) + "'");
      exponent = magnitude.get_si() * (exp_negative ? -1 : 1);
      s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = s.substr(0, dot);
      std::string_view frac_part = s.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) throw ParseError("not a number: '" + std::string(text) + "'");
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      digits = std::string(s);
    }
    Integer mantissa = parse_integer(digits, text);
    if (exponent >= 0) {
      value = Rational(mantissa * pow10(static_cast<unsigned>(exponent)));
    } else {
      value = Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
    }
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rational& r, int digits) {
  digits = std::max(digits, 0);
  Integer scale = pow10(static_cast<unsigned>(digits));
  Integer num = abs(r.get_num()) * scale;
  const Integer& den = r.get_den();
  Integer rounded = (2 * num + den) / (2 * den);
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) - body.size() + 1, '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  bool negative = r < 0 && rounded != 0;
  return negative ? "-" + body : body;
}

bool is_dyadic(const Rational& r) {
  const Integer& d = r.get_den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::variable() { return monomial(1, 1); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Integer> out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

Rational evaluate(const IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

int sign_at(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  // b^d * p(a/b) = sum c_i a^i b^(d-i), Horner from the top.
  Integer acc = p.leading();
  Integer bpow = b;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    acc *= a;
    mpz_addmul(acc.get_mpz_t(), p[i].get_mpz_t(), bpow.get_mpz_t());
    bpow *= b;
  }
  return sgn(acc);
}

int sign_at_infinity(const IntPoly& p, bool positive) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  if (!positive && p.degree() % 2 == 1) s = -s;
  return s;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw NotDivisible("divisor degree exceeds dividend degree");
  std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = rem[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) {
      throw NotDivisible("leading coefficient does not divide at degree " + std::to_string(k + db));
    }
    Integer q = top / b.leading();
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), q.get_mpz_t(),
                 b[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& r : rem) {
    if (r != 0) throw NotDivisible("nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

IntPoly exact_div(const IntPoly& a, const Integer& d) {
  if (d == 0) throw NotDivisible("division by zero");
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      throw NotDivisible("coefficient " + c.get_str() + " not divisible by " + d.get_str());
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  return g == 1 ? p : exact_div(p, g);
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("pseudo-remainder by zero");
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const Integer& lb = b.leading();
  int steps = 0;
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    Integer lr = r.back();
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(dr - db + j)].get_mpz_t(), lr.get_mpz_t(),
                 b[static_cast<std::size_t>(j)].get_mpz_t());
    }
    ++steps;
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  IntPoly out(std::move(r));
  if (lb < 0 && steps % 2 == 1) out = -out;
  return out;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero() && x.leading() < 0) x = -x;
  return x;
}

IntPoly reversed(const IntPoly& p) {
  std::vector<Integer> v(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPoly(std::move(v));
}

std::string to_string(const IntPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    append_term(out, Integer(abs(p[i])).get_str(), p[i] < 0, i, var, first);
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RatPoly::RatPoly(const IntPoly& p) {
  coeffs_.reserve(p.size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

Rational evaluate(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i];
  return acc;
}

IntPoly clear_denominators(const RatPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
  return primitive_part(IntPoly(std::move(out)));
}

IntPoly to_int_poly(const RatPoly& p) {
  std::vector<Integer> out;
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw NotDivisible("non-integral coefficient " + c.get_str());
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(std::vector<IntPoly> y_coeffs) : ys_(std::move(y_coeffs)) { normalize(); }

BiPoly::BiPoly(const IntPoly& c) {
  if (!c.is_zero()) ys_.push_back(c);
}

BiPoly BiPoly::y() { return monomial_y(IntPoly{1}, 1); }

BiPoly BiPoly::monomial_y(const IntPoly& c, std::size_t power) {
  std::vector<IntPoly> v(power + 1);
  v[power] = c;
  return BiPoly(std::move(v));
}

void BiPoly::normalize() {
  while (!ys_.empty() && ys_.back().is_zero()) ys_.pop_back();
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (rhs.ys_.size() > ys_.size()) ys_.resize(rhs.ys_.size());
  for (std::size_t j = 0; j < rhs.ys_.size(); ++j) ys_[j] += rhs.ys_[j];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  if (rhs.ys_.size() > ys_.size()) ys_.resize(rhs.ys_.size());
  for (std::size_t j = 0; j < rhs.ys_.size(); ++j) ys_[j] -= rhs.ys_[j];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator*=(const IntPoly& c) {
  for (auto& p : ys_) p = p * c;
  normalize();
  return *this;
}

BiPoly& BiPoly::operator*=(const Integer& c) {
  for (auto& p : ys_) p *= c;
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPoly> out(a.ys_.size() + b.ys_.size() - 1);
  for (std::size_t i = 0; i < a.ys_.size(); ++i) {
    if (a.ys_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.ys_.size(); ++j) out[i + j] += a.ys_[i] * b.ys_[j];
  }
  return BiPoly(std::move(out));
}

BiPoly derivative_y(const BiPoly& f) {
  if (f.degree_y() < 1) return {};
  auto ys = f.y_coeffs();
  std::vector<IntPoly> out(ys.size() - 1);
  for (std::size_t j = 1; j < ys.size(); ++j) out[j - 1] = ys[j] * Integer(static_cast<unsigned long>(j));
  return BiPoly(std::move(out));
}

RatPoly eval_y(const BiPoly& f, const Rational& y0) {
  RatPoly acc;
  auto ys = f.y_coeffs();
  for (std::size_t j = ys.size(); j-- > 0;) {
    acc *= y0;
    acc += RatPoly(ys[j]);
  }
  return acc;
}

RatPoly eval_t(const BiPoly& f, const Rational& t0) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(f.degree_y() + 1));
  for (const auto& c : f.y_coeffs()) out.push_back(evaluate(c, t0));
  return RatPoly(std::move(out));
}

IntPoly slice_at_one(const BiPoly& f) {
  IntPoly acc;
  for (const auto& c : f.y_coeffs()) acc += c;
  return acc;
}

BiPoly exact_div(const BiPoly& f, const IntPoly& d) {
  std::vector<IntPoly> out;
  out.reserve(static_cast<std::size_t>(f.degree_y() + 1));
  for (const auto& c : f.y_coeffs()) out.push_back(exact_div(c, d));
  return BiPoly(std::move(out));
}

BiPoly exact_div(const BiPoly& f, const Integer& d) {
  std::vector<IntPoly> out;
  out.reserve(static_cast<std::size_t>(f.degree_y() + 1));
  for (const auto& c : f.y_coeffs()) out.push_back(exact_div(c, d));
  return BiPoly(std::move(out));
}

std::string to_string(const BiPoly& f, std::string_view y_var, std::string_view t_var) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto ys = f.y_coeffs();
  for (std::size_t j = ys.size(); j-- > 0;) {
    if (ys[j].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    bool bare = j > 0 && ys[j] == IntPoly{1};
    if (!bare) {
      bool wrap = j > 0 && ys[j].size() > 1;
      out << (wrap ? "(" : "") << to_string(ys[j], t_var) << (wrap ? ")" : "");
    }
    if (j > 0) {
      out << y_var;
      if (j > 1) out << '^' << j;
    }
  }
  return out.str();
}

}  // namespace poincare
