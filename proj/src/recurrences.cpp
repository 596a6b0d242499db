#include "poincare/recurrences.hpp"

#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>

#include "poincare/errors.hpp"
#include "poincare/io.hpp"

namespace poincare {

namespace {

const IntPoly kOnePlusT{1, 1};

void require_index(int n, int lo, std::string_view what) {
  if (n < lo) {
    throw std::invalid_argument(std::string(what) + " needs index >= " + std::to_string(lo) +
                                ", got " + std::to_string(n));
  }
}

// `p[k]` must hold P_k for every k used.
template <class Table>
IntPoly s_from(const Table& p, int n) {
  IntPoly sum;
  for (int j = 3; j <= n - 2; ++j) {
    sum += binomial(static_cast<unsigned>(n - 2), static_cast<unsigned>(j - 1)) *
           (p[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(n + 1 - j)]);
  }
  return sum;
}

template <class Table>
IntPoly p_from(const Table& p, int n) {
  if (n <= 3) return IntPoly{1};
  return kOnePlusT * p[static_cast<std::size_t>(n - 1)] + IntPoly::variable() * s_from(p, n);
}

template <class Table>
IntPoly ptilde_from(const Table& p, int n) {
  IntPoly sum;
  for (int j = 0; j <= n; ++j) {
    const int power = std::min(n - j, 2);
    sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) *
           (IntPoly::monomial(1, static_cast<std::size_t>(power)) *
            (p[static_cast<std::size_t>(j + 1)] * p[static_cast<std::size_t>(n + 1 - j)]));
  }
  return sum;
}

// G_{m+1} = m x G_m + x(x+1) G_m'
IntPoly g_step(const IntPoly& g, int m) {
  return IntPoly::monomial(m, 1) * g + IntPoly{0, 1, 1} * derivative(g);
}

// K_{n+1} = (n x + 1) K_n + x(x+1) K_n'
IntPoly k_step(const IntPoly& k, int n) {
  return IntPoly{1, n} * k + IntPoly{0, 1, 1} * derivative(k);
}

// y(y + t - 1), the transport coefficient shared by both deformations.
BiPoly transport() { return BiPoly({IntPoly{}, IntPoly{-1, 1}, IntPoly{1}}); }

// H_{m+1} = (m x - (m-1) eps) H_m + x(x + 1 - eps) H_m'
BiPoly h_step(const BiPoly& h, int m) {
  BiPoly lin({IntPoly{0, -(m - 1)}, IntPoly{m}});
  BiPoly quad({IntPoly{}, IntPoly{1, -1}, IntPoly{1}});
  return lin * h + quad * derivative_y(h);
}

template <class T>
void pad_to(std::deque<T>& table, int first) {
  while (static_cast<int>(table.size()) < first) table.emplace_back();
}

}  // namespace

std::string_view name(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::S: return "S";
    case Family::Ptilde: return "Ptilde";
    case Family::Phat: return "Phat";
    case Family::G: return "G";
    case Family::K: return "K";
  }
  return "?";
}

std::string_view name(Deformation d) { return d == Deformation::F ? "F" : "Fhat"; }

int min_index(Family f) { return f == Family::S ? 4 : 1; }

BiPoly f_step(const BiPoly& f_m, int m) {
  BiPoly lin({IntPoly{1 - m}, IntPoly{m}});
  return lin * f_m + transport() * derivative_y(f_m);
}

BiPoly fhat_step(const BiPoly& fhat_n, int n) {
  BiPoly lin({IntPoly{1 - n, 1}, IntPoly{n}});
  return lin * fhat_n + transport() * derivative_y(fhat_n);
}

// ---------------------------------------------------------------- cache

std::deque<IntPoly>& FamilyCache::table(Family f) {
  switch (f) {
    case Family::P: return p_;
    case Family::S: return s_;
    case Family::Ptilde: return ptilde_;
    case Family::Phat: return phat_;
    case Family::G: return g_;
    case Family::K: return k_;
  }
  return p_;
}

const std::deque<IntPoly>& FamilyCache::table(Family f) const {
  return const_cast<FamilyCache*>(this)->table(f);
}

std::deque<BiPoly>& FamilyCache::table(Deformation d) { return d == Deformation::F ? f_ : fhat_; }

const std::deque<BiPoly>& FamilyCache::table(Deformation d) const {
  return d == Deformation::F ? f_ : fhat_;
}

void FamilyCache::extend_p(int n) {
  while (static_cast<int>(p_.size()) <= n) {
    const int k = static_cast<int>(p_.size());
    p_.push_back(k == 0 ? IntPoly{} : p_from(p_, k));
  }
}

void FamilyCache::extend_s(int n) {
  extend_p(std::max(n - 2, 3));
  pad_to(s_, 4);
  while (static_cast<int>(s_.size()) <= n) s_.push_back(s_from(p_, static_cast<int>(s_.size())));
}

void FamilyCache::extend_ptilde(int n) {
  extend_p(n + 1);
  pad_to(ptilde_, 1);
  while (static_cast<int>(ptilde_.size()) <= n) {
    ptilde_.push_back(ptilde_from(p_, static_cast<int>(ptilde_.size())));
  }
}

void FamilyCache::extend_phat(int n) {
  extend_ptilde(n);
  pad_to(phat_, 1);
  while (static_cast<int>(phat_.size()) <= n) {
    phat_.push_back(exact_div(ptilde_[phat_.size()], kOnePlusT));
  }
}

void FamilyCache::extend_g(int n) {
  if (g_.size() < 2) g_ = {IntPoly{}, IntPoly{1}};
  while (static_cast<int>(g_.size()) <= n) {
    const int m = static_cast<int>(g_.size()) - 1;
    g_.push_back(g_step(g_.back(), m));
  }
}

void FamilyCache::extend_k(int n) {
  if (k_.size() < 2) k_ = {IntPoly{}, IntPoly{1}};
  while (static_cast<int>(k_.size()) <= n) {
    const int m = static_cast<int>(k_.size()) - 1;
    k_.push_back(k_step(k_.back(), m));
  }
}

void FamilyCache::extend_f(int n) {
  if (f_.size() < 2) f_ = {BiPoly{}, BiPoly(IntPoly{1})};
  while (static_cast<int>(f_.size()) <= n) {
    const int m = static_cast<int>(f_.size()) - 1;
    f_.push_back(f_step(f_.back(), m));
  }
}

void FamilyCache::extend_fhat(int n) {
  if (fhat_.size() < 2) fhat_ = {BiPoly{}, BiPoly(IntPoly{1})};
  while (static_cast<int>(fhat_.size()) <= n) {
    const int m = static_cast<int>(fhat_.size()) - 1;
    fhat_.push_back(fhat_step(fhat_.back(), m));
  }
}

const IntPoly& FamilyCache::get(Family f, int n) {
  require_index(n, min_index(f), name(f));
  {
    std::shared_lock lock(mutex_);
    const auto& t = table(f);
    if (static_cast<int>(t.size()) > n) return t[static_cast<std::size_t>(n)];
  }
  std::unique_lock lock(mutex_);
  switch (f) {
    case Family::P: extend_p(n); break;
    case Family::S: extend_s(n); break;
    case Family::Ptilde: extend_ptilde(n); break;
    case Family::Phat: extend_phat(n); break;
    case Family::G: extend_g(n); break;
    case Family::K: extend_k(n); break;
  }
  return table(f)[static_cast<std::size_t>(n)];
}

const BiPoly& FamilyCache::get(Deformation d, int m) {
  require_index(m, 1, name(d));
  {
    std::shared_lock lock(mutex_);
    const auto& t = table(d);
    if (static_cast<int>(t.size()) > m) return t[static_cast<std::size_t>(m)];
  }
  std::unique_lock lock(mutex_);
  if (d == Deformation::F) {
    extend_f(m);
  } else {
    extend_fhat(m);
  }
  return table(d)[static_cast<std::size_t>(m)];
}

FamilyCache& default_cache() {
  static FamilyCache cache;
  return cache;
}

const IntPoly& compute_p(int n) { return default_cache().get(Family::P, n); }
const IntPoly& compute_s(int n) { return default_cache().get(Family::S, n); }
const IntPoly& compute_ptilde(int n) { return default_cache().get(Family::Ptilde, n); }
const IntPoly& compute_phat(int n) { return default_cache().get(Family::Phat, n); }
const IntPoly& compute_g(int m) { return default_cache().get(Family::G, m); }
const IntPoly& compute_k(int n) { return default_cache().get(Family::K, n); }
const BiPoly& compute_f(int m) { return default_cache().get(Deformation::F, m); }
const BiPoly& compute_fhat(int n) { return default_cache().get(Deformation::Fhat, n); }

BiPoly compute_h_scaled(int m) {
  require_index(m, 1, "H");
  BiPoly h(IntPoly{1});
  for (int k = 1; k < m; ++k) h = h_step(h, k);
  return h;
}

BiPoly h_scaled_from_f(const BiPoly& f, int m) {
  // [x^j] H = sum_k c_{j,k} t^(k + j - (m-1)) = sum_k c_{j,k} eps^((m-1) - j - k)
  std::vector<IntPoly> out;
  auto ys = f.y_coeffs();
  for (std::size_t j = 0; j < ys.size(); ++j) {
    std::vector<Integer> eps_coeffs;
    for (std::size_t k = 0; k < ys[j].size(); ++k) {
      const long e = static_cast<long>(m - 1) - static_cast<long>(j) - static_cast<long>(k);
      if (e < 0) {
        if (ys[j][k] != 0) throw NotDivisible("positive power of t survives the scaling");
        continue;
      }
      if (eps_coeffs.size() <= static_cast<std::size_t>(e)) eps_coeffs.resize(static_cast<std::size_t>(e) + 1);
      eps_coeffs[static_cast<std::size_t>(e)] += ys[j][k];
    }
    out.emplace_back(std::move(eps_coeffs));
  }
  return BiPoly(std::move(out));
}

namespace uncached {

IntPoly compute(Family f, int n) {
  require_index(n, min_index(f), name(f));
  auto p_table = [](int upto) {
    std::vector<IntPoly> p(static_cast<std::size_t>(std::max(upto, 3) + 1));
    for (int k = 1; k <= std::max(upto, 3); ++k) p[static_cast<std::size_t>(k)] = p_from(p, k);
    return p;
  };
  switch (f) {
    case Family::P: return p_table(n)[static_cast<std::size_t>(n)];
    case Family::S: return s_from(p_table(n - 2), n);
    case Family::Ptilde: return ptilde_from(p_table(n + 1), n);
    case Family::Phat: return exact_div(ptilde_from(p_table(n + 1), n), kOnePlusT);
    case Family::G: {
      IntPoly g{1};
      for (int m = 1; m < n; ++m) g = g_step(g, m);
      return g;
    }
    case Family::K: {
      IntPoly k{1};
      for (int m = 1; m < n; ++m) k = k_step(k, m);
      return k;
    }
  }
  return {};
}

BiPoly compute(Deformation d, int m) {
  require_index(m, 1, name(d));
  BiPoly f(IntPoly{1});
  for (int k = 1; k < m; ++k) f = d == Deformation::F ? f_step(f, k) : fhat_step(f, k);
  return f;
}

}  // namespace uncached

// ---------------------------------------------------------------- validation

namespace {

bool palindromic(const IntPoly& p) { return p == reversed(p); }

bool all_positive(const IntPoly& p) {
  for (const auto& c : p.coeffs()) {
    if (c <= 0) return false;
  }
  return true;
}

std::string at(std::string_view fam, int n, std::string_view what) {
  return std::string(fam) + "_" + std::to_string(n) + ": " + std::string(what);
}

}  // namespace

std::string validate_table(Family f, const std::vector<IntPoly>& table) {
  for (int n = min_index(f); n < static_cast<int>(table.size()); ++n) {
    const IntPoly& p = table[static_cast<std::size_t>(n)];
    switch (f) {
      case Family::P:
        if (n <= 3) {
          if (p != IntPoly{1}) return at("P", n, "seed must be 1");
          break;
        }
        if (p.degree() != n - 3) return at("P", n, "wrong degree");
        if (p.leading() != 1 || p[0] != 1) return at("P", n, "not monic with constant term 1");
        if (!all_positive(p)) return at("P", n, "nonpositive coefficient");
        if (!palindromic(p)) return at("P", n, "not palindromic");
        if (p != p_from(table, n)) return at("P", n, "breaks the recurrence");
        break;
      case Family::S:
        if (n == 4) {
          if (!p.is_zero()) return at("S", n, "must be the empty sum");
          break;
        }
        if (p.degree() != n - 5) return at("S", n, "wrong degree");
        if (!all_positive(p) || !palindromic(p)) return at("S", n, "not a positive palindrome");
        break;
      case Family::Ptilde:
        if (p.degree() != n || p.leading() != 1) return at("Ptilde", n, "not monic of degree n");
        if (!all_positive(p) || !palindromic(p)) return at("Ptilde", n, "not a positive palindrome");
        try {
          exact_div(p, kOnePlusT);
        } catch (const NotDivisible&) {
          return at("Ptilde", n, "not divisible by 1 + t");
        }
        break;
      case Family::Phat:
        if (p.degree() != n - 1 || p.leading() != 1) return at("Phat", n, "not monic of degree n-1");
        if (!all_positive(p)) return at("Phat", n, "nonpositive coefficient");
        break;
      case Family::G:
        if (p.degree() != n - 1) return at("G", n, "wrong degree");
        if (p.leading() != double_factorial_odd(static_cast<unsigned>(n))) return at("G", n, "wrong leading coefficient");
        if (n >= 2 && p[0] != 0) return at("G", n, "G(0) != 0");
        if (n >= 2 && p != g_step(table[static_cast<std::size_t>(n - 1)], n - 1)) return at("G", n, "breaks the recurrence");
        break;
      case Family::K:
        if (p.degree() != n - 1) return at("K", n, "wrong degree");
        if (p.leading() != double_factorial_odd(static_cast<unsigned>(n))) return at("K", n, "wrong leading coefficient");
        if (p[0] != 1) return at("K", n, "K(0) != 1");
        if (n >= 2 && sign_at(p, Rational(-1)) != 0) return at("K", n, "K(-1) != 0");
        if (n >= 2 && p != k_step(table[static_cast<std::size_t>(n - 1)], n - 1)) return at("K", n, "breaks the recurrence");
        break;
    }
  }
  return {};
}

std::string validate_table(Deformation d, const std::vector<BiPoly>& table) {
  const auto fam = name(d);
  for (int m = 1; m < static_cast<int>(table.size()); ++m) {
    const BiPoly& f = table[static_cast<std::size_t>(m)];
    if (f.degree_y() != m - 1) return at(fam, m, "wrong y-degree");
    if (f.leading_y() != IntPoly::constant(double_factorial_odd(static_cast<unsigned>(m)))) {
      return at(fam, m, "wrong leading coefficient");
    }
    if (d == Deformation::F && m >= 2 && !f.coeff_y(0).is_zero()) return at(fam, m, "F(0, t) != 0");
    if (m >= 2) {
      const BiPoly& prev = table[static_cast<std::size_t>(m - 1)];
      if (f != (d == Deformation::F ? f_step(prev, m - 1) : fhat_step(prev, m - 1))) {
        return at(fam, m, "breaks the recurrence");
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------- disk cache

void FamilyCache::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  std::shared_lock lock(mutex_);
  for (Family f : {Family::P, Family::S, Family::Ptilde, Family::Phat, Family::G, Family::K}) {
    const auto& t = table(f);
    Json arr = Json::array();
    for (int n = min_index(f); n < static_cast<int>(t.size()); ++n) arr.push_back(to_json(t[static_cast<std::size_t>(n)]));
    std::ofstream(dir / (std::string(name(f)) + ".json")) << arr.dump() << '\n';
  }
  for (Deformation d : {Deformation::F, Deformation::Fhat}) {
    const auto& t = table(d);
    Json arr = Json::array();
    for (std::size_t m = 1; m < t.size(); ++m) arr.push_back(to_json(t[m]));
    std::ofstream(dir / (std::string(name(d)) + ".json")) << arr.dump() << '\n';
  }
}

std::string FamilyCache::check_against_p(Family f, const std::vector<IntPoly>& loaded) {
  if (f != Family::S && f != Family::Ptilde && f != Family::Phat) return {};
  const int top = static_cast<int>(loaded.size()) - 1;
  extend_p(top + 1);
  for (int n = min_index(f); n <= top; ++n) {
    const IntPoly& got = loaded[static_cast<std::size_t>(n)];
    IntPoly want = f == Family::S        ? s_from(p_, n)
                   : f == Family::Ptilde ? ptilde_from(p_, n)
                                         : exact_div(ptilde_from(p_, n), kOnePlusT);
    if (got != want) return at(name(f), n, "disagrees with P");
  }
  return {};
}

std::vector<std::string> FamilyCache::load(const std::filesystem::path& dir) {
  std::vector<std::string> messages;
  auto read = [&](std::string_view fam) -> std::optional<Json> {
    auto path = dir / (std::string(fam) + ".json");
    if (!std::filesystem::exists(path)) return std::nullopt;
    try {
      std::ifstream in(path);
      return Json::parse(in);
    } catch (const std::exception& e) {
      messages.push_back(std::string(fam) + ": unreadable cache file (" + e.what() + ")");
      return std::nullopt;
    }
  };

  std::unique_lock lock(mutex_);
  for (Family f : {Family::P, Family::S, Family::Ptilde, Family::Phat, Family::G, Family::K}) {
    auto j = read(name(f));
    if (!j) continue;
    try {
      std::vector<IntPoly> loaded(static_cast<std::size_t>(min_index(f)));
      for (const auto& e : *j) loaded.push_back(int_poly_from_json(e));
      if (auto why = validate_table(f, loaded); !why.empty()) {
        messages.push_back("rejected cache: " + why);
        continue;
      }
      if (auto why = check_against_p(f, loaded); !why.empty()) {
        messages.push_back("rejected cache: " + why);
        continue;
      }
      auto& t = table(f);
      if (loaded.size() > static_cast<std::size_t>(min_index(f)) && loaded.size() > t.size()) {
        t.assign(loaded.begin(), loaded.end());
      }
    } catch (const std::exception& e) {
      messages.push_back(std::string(name(f)) + ": malformed cache (" + e.what() + ")");
    }
  }
  for (Deformation d : {Deformation::F, Deformation::Fhat}) {
    auto j = read(name(d));
    if (!j) continue;
    try {
      std::vector<BiPoly> loaded(1);
      for (const auto& e : *j) loaded.push_back(bi_poly_from_json(e));
      if (auto why = validate_table(d, loaded); !why.empty()) {
        messages.push_back("rejected cache: " + why);
        continue;
      }
      auto& t = table(d);
      if (loaded.size() > 1 && loaded.size() > t.size()) t.assign(loaded.begin(), loaded.end());
    } catch (const std::exception& e) {
      messages.push_back(std::string(name(d)) + ": malformed cache (" + e.what() + ")");
    }
  }
  return messages;
}

}  // namespace poincare
