#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpap {

using Int = mpz_class;
using Rat = mpq_class;

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Division by a series with zero constant term.
struct DivisorNotUnit : SeriesError {
  DivisorNotUnit() : SeriesError("series divisor has zero constant term") {}
};

// sqrt_series requires constant term exactly 1.
struct ConstantNotOne : SeriesError {
  ConstantNotOne() : SeriesError("sqrt requires constant term 1") {}
};

// compose/comp_inverse require the inner series to vanish at 0.
struct InnerConstantNonzero : SeriesError {
  InnerConstantNonzero() : SeriesError("inner series has nonzero constant term") {}
};

// comp_inverse additionally requires a unit linear coefficient.
struct NotInvertible : SeriesError {
  NotInvertible() : SeriesError("series is not invertible under composition") {}
};

// A coefficient beyond the tracked truncation order was requested.
struct TruncationExceeded : SeriesError {
  TruncationExceeded(int asked, int have)
      : SeriesError("coefficient " + std::to_string(asked) +
                    " beyond truncation order " + std::to_string(have)) {}
};

// A bivariate evaluation needs a wider u-window than the operand carries.
struct WindowTooSmall : SeriesError {
  WindowTooSmall(int need, int have)
      : SeriesError("u-window " + std::to_string(have) +
                    " too small, need " + std::to_string(need)) {}
};

// An operation expected integer coefficients but found a proper fraction.
struct NonIntegerCoefficient : SeriesError {
  explicit NonIntegerCoefficient(int n)
      : SeriesError("coefficient of z^" + std::to_string(n) + " is not an integer") {}
};

// Truncated power series over Q in one variable z. Every value carries its
// truncation order; binary operations produce the tightest order both
// operands support, and reading past the order throws rather than padding
// with silent zeros.
class USeries {
 public:
  explicit USeries(int order) : c_(static_cast<size_t>(order) + 1) {}
  USeries(std::initializer_list<long> coeffs, int order) : USeries(order) {
    int n = 0;
    for (long v : coeffs) {
      if (n > order) break;
      c_[n++] = Rat(v);
    }
  }
  static USeries constant(const Rat& v, int order) {
    USeries s(order);
    s.c_[0] = v;
    return s;
  }
  static USeries z(int order) {
    USeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const Rat& operator[](int n) const {
    if (n < 0 || n > order()) throw TruncationExceeded(n, order());
    return c_[static_cast<size_t>(n)];
  }
  void set(int n, Rat v) {
    if (n < 0 || n > order()) throw TruncationExceeded(n, order());
    c_[static_cast<size_t>(n)] = std::move(v);
  }

  bool is_zero() const;
  // Index of the lowest nonzero coefficient; order()+1 when all zero.
  int valuation() const;
  bool integral() const;
  std::vector<Int> int_coeffs() const;  // throws NonIntegerCoefficient

  USeries operator-() const;
  USeries scaled(const Rat& a) const;
  USeries truncated(int order) const;  // requires order <= this->order
  USeries shift_up(int k = 1) const;   // multiply by z^k; order grows by k
  USeries shift_down(int k = 1) const; // divide by z^k; requires valuation >= k
  USeries pow(int e) const;
  USeries div(const USeries& b) const; // throws DivisorNotUnit
  USeries derivative() const;

  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b);
  friend USeries operator*(const USeries& a, const USeries& b);

  bool operator==(const USeries& b) const { return c_ == b.c_; }

  std::string to_string() const;

 private:
  std::vector<Rat> c_;
};

USeries sqrt_series(const USeries& a);                       // throws ConstantNotOne
USeries compose(const USeries& outer, const USeries& inner); // throws InnerConstantNonzero
USeries comp_inverse(const USeries& f);                      // throws NotInvertible

enum class Named { Catalan, Motzkin, RiordanNumbers };
USeries named_series(Named which, int order);

// Truncated series in z whose coefficients are polynomials in u of bounded
// degree: order() tracks the z-truncation, width() the largest stored power
// of u. Binary operations again keep the tightest window.
class BSeries {
 public:
  BSeries(int order_z, int deg_u)
      : n_(order_z), k_(deg_u),
        c_(static_cast<size_t>(order_z) + 1,
           std::vector<Rat>(static_cast<size_t>(deg_u) + 1)) {}

  static BSeries from_columns(const std::vector<USeries>& cols);

  int order() const { return n_; }
  int width() const { return k_; }

  const Rat& at(int n, int k) const {
    check(n, k);
    return c_[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }
  void set(int n, int k, Rat v) {
    check(n, k);
    c_[static_cast<size_t>(n)][static_cast<size_t>(k)] = std::move(v);
  }

  USeries column(int k) const;

  BSeries operator-() const;
  BSeries shift_u(int j) const;               // multiply by u^j; width grows by j
  BSeries mul_z(const USeries& a) const;      // multiply by a series in z alone
  BSeries truncated(int order_z, int deg_u) const;

  friend BSeries operator+(const BSeries& a, const BSeries& b);
  friend BSeries operator-(const BSeries& a, const BSeries& b);
  friend BSeries operator*(const BSeries& a, const BSeries& b);

  bool is_zero() const;

  // Substitute u := point. The rational overload needs the full u-window at
  // every z-order and throws WindowTooSmall when width() < order() and the
  // point is nonzero; substituting a series of valuation >= 1 only needs the
  // window the z-truncation can see.
  USeries eval_u(const Rat& point) const;
  USeries eval_u(const USeries& point) const;

 private:
  void check(int n, int k) const {
    if (n < 0 || n > n_) throw TruncationExceeded(n, n_);
    if (k < 0 || k > k_) throw TruncationExceeded(k, k_);
  }
  int n_, k_;
  std::vector<std::vector<Rat>> c_;
};

}  // namespace mpap
