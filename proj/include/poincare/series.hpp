#pragma once

// Truncated exponential generating functions: entry k is the coefficient of
// x^k / k!. Products are binomial convolutions, so for A = sum a_k x^k/k! and
// B likewise, (AB)_n = sum_k binom(n, k) a_k b_{n-k}.
//
// C is any coefficient ring with a zero default value, +, -, *, and
// multiplication by Integer (IntPoly, BiPoly).

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "poincare/exact.hpp"

namespace poincare {

template <class C>
class EgfSeries {
 public:
  /// Zero series holding coefficients 0..order.
  explicit EgfSeries(int order) : c_(static_cast<std::size_t>(check(order)) + 1) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  C& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }

  /// The series x.
  static EgfSeries x(int order) {
    EgfSeries s(order);
    if (order >= 1) s[1] = C(IntPoly{1});
    return s;
  }

  EgfSeries truncated(int order) const {
    EgfSeries s(std::min(order, this->order()));
    std::copy_n(c_.begin(), s.c_.size(), s.c_.begin());
    return s;
  }

  /// d/dx: shifts the coefficients down, losing one order.
  EgfSeries derivative() const {
    if (order() == 0) throw std::invalid_argument("derivative of an order-0 series");
    EgfSeries s(order() - 1);
    for (int k = 0; k <= s.order(); ++k) s[k] = (*this)[k + 1];
    return s;
  }

  /// x times the series: (x s)_k = k s_{k-1}.
  EgfSeries times_x() const {
    EgfSeries s(order());
    for (int k = 1; k <= order(); ++k) s[k] = (*this)[k - 1] * Integer(k);
    return s;
  }

  /// Applies f to every coefficient.
  template <class F>
  EgfSeries map(F&& f) const {
    EgfSeries s(order());
    for (int k = 0; k <= order(); ++k) s[k] = f((*this)[k]);
    return s;
  }

  EgfSeries& operator+=(const EgfSeries& rhs) {
    shrink_to(rhs.order());
    for (int k = 0; k <= order(); ++k) c_[static_cast<std::size_t>(k)] += rhs[k];
    return *this;
  }
  EgfSeries& operator-=(const EgfSeries& rhs) {
    shrink_to(rhs.order());
    for (int k = 0; k <= order(); ++k) c_[static_cast<std::size_t>(k)] -= rhs[k];
    return *this;
  }

  friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
  friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }

  friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
    EgfSeries s(std::min(a.order(), b.order()));
    for (int n = 0; n <= s.order(); ++n) {
      C sum{};
      for (int k = 0; k <= n; ++k) {
        if (a[k].is_zero() || b[n - k].is_zero()) continue;
        sum += (a[k] * b[n - k]) * binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
      }
      s[n] = std::move(sum);
    }
    return s;
  }

  /// Coefficientwise comparison up to the smaller order.
  friend bool agree(const EgfSeries& a, const EgfSeries& b) { return first_difference(a, b) < 0; }

  /// First index where the coefficients differ, or -1.
  friend int first_difference(const EgfSeries& a, const EgfSeries& b) {
    const int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k) {
      if (!(a[k] == b[k])) return k;
    }
    return -1;
  }

 private:
  static int check(int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    return order;
  }
  void shrink_to(int order) {
    if (order < this->order()) c_.resize(static_cast<std::size_t>(order) + 1);
  }

  std::vector<C> c_;
};

using TSeries = EgfSeries<IntPoly>;   // coefficients in Z[t]
using YTSeries = EgfSeries<BiPoly>;   // coefficients in Z[y, t]

}  // namespace poincare
