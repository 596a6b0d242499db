#pragma once

// Polynomial families generated by recurrences.
//
//   P_n      Poincare polynomial of M_{0,n}bar; P_1 = P_2 = P_3 = 1
//   S_n      binomial convolution of lower P's (n >= 4)
//   Ptilde_n Poincare polynomial of the Fulton-MacPherson space P^1[n]
//   Phat_n   Ptilde_n / (1 + t)
//   G_m, K_n scaled t -> -inf limits of F_m and Fhat_n
//   F_m      bivariate deformation with F_m(1, t) = P_{m+1}(t)
//   Fhat_n   residual FM deformation with Fhat_n(1, t) = Phat_n(t)
//
// Indices follow the mathematical convention (P and F start at 1).

#include <deque>
#include <filesystem>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/exact.hpp"

namespace poincare {

enum class Family { P, S, Ptilde, Phat, G, K };
enum class Deformation { F, Fhat };

std::string_view name(Family f);
std::string_view name(Deformation d);
/// Smallest index the family is defined for (S starts at 4).
int min_index(Family f);

/// Thread-safe memo of every family. Entries are filled in increasing index
/// order, so each step reads only finished entries. Returned references stay
/// valid until load() replaces a table, so load before handing any out.
class FamilyCache {
 public:
  const IntPoly& get(Family f, int n);
  const BiPoly& get(Deformation d, int m);

  /// Writes one JSON file per family into `dir`.
  void save(const std::filesystem::path& dir) const;
  /// Loads whatever family files exist in `dir`. Each family is validated
  /// (structure, recurrence, agreement with P) before it is trusted; an
  /// invalid file is skipped and reported in the returned messages.
  std::vector<std::string> load(const std::filesystem::path& dir);

 private:
  // Callers hold the unique lock.
  std::string check_against_p(Family f, const std::vector<IntPoly>& loaded);
  void extend_p(int n);
  void extend_s(int n);
  void extend_ptilde(int n);
  void extend_phat(int n);
  void extend_g(int n);
  void extend_k(int n);
  void extend_f(int m);
  void extend_fhat(int n);

  std::deque<IntPoly>& table(Family f);
  const std::deque<IntPoly>& table(Family f) const;
  std::deque<BiPoly>& table(Deformation d);
  const std::deque<BiPoly>& table(Deformation d) const;

  mutable std::shared_mutex mutex_;
  // Slot k holds index k; slot 0 (and slots below min_index) are unused.
  std::deque<IntPoly> p_, s_, ptilde_, phat_, g_, k_;
  std::deque<BiPoly> f_, fhat_;
};

/// Process-wide cache used by the compute_* helpers below.
FamilyCache& default_cache();

const IntPoly& compute_p(int n);
const IntPoly& compute_s(int n);
const IntPoly& compute_ptilde(int n);
const IntPoly& compute_phat(int n);
const IntPoly& compute_g(int m);
const IntPoly& compute_k(int n);
const BiPoly& compute_f(int m);
const BiPoly& compute_fhat(int n);

/// H_{m,t}(x) = t^{-(m-1)} F_m(t x, t) written as a polynomial in x whose
/// coefficients are polynomials in eps = 1/t. Built from its own recurrence;
/// setting eps = 0 gives G_m.
BiPoly compute_h_scaled(int m);

/// Same object obtained directly from the coefficients of F_m.
BiPoly h_scaled_from_f(const BiPoly& f, int m);

/// Recurrence steps, exposed for the identity checks.
BiPoly f_step(const BiPoly& f_m, int m);
BiPoly fhat_step(const BiPoly& fhat_n, int n);

/// Uncached reference implementations: each call builds private tables from
/// the seeds. Used to check that the memo layer changes nothing.
namespace uncached {
IntPoly compute(Family f, int n);
BiPoly compute(Deformation d, int m);
}  // namespace uncached

/// Checks the structural invariants of a whole family table as loaded from
/// disk. `table[k]` must hold index k (earlier slots ignored). Returns an
/// empty string when everything holds, otherwise a description.
std::string validate_table(Family f, const std::vector<IntPoly>& table);
std::string validate_table(Deformation d, const std::vector<BiPoly>& table);

}  // namespace poincare
