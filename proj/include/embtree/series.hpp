#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "embtree/rational.hpp"

namespace embtree {

// Power series in z known modulo z^order. Binary operations keep the
// smaller order; nothing ever extends precision implicitly.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  static TruncatedSeries variable(std::size_t order);  // z
  static TruncatedSeries monomial(std::size_t k, const Rational& c, std::size_t order);
  static TruncatedSeries from_ints(std::initializer_list<long> coeffs);

  std::size_t order() const { return c_.size(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t n) const;  // throws past order
  Rational& at(std::size_t n);                       // throws past order

  std::size_t valuation() const;  // == order() for the zero series
  bool is_zero() const { return valuation() == order(); }

  TruncatedSeries truncate(std::size_t n) const;  // n <= order
  // Explicit zero padding; only for lifting schemes that know the tail is
  // about to be recomputed.
  TruncatedSeries zero_extended(std::size_t n) const;
  TruncatedSeries shift_up(std::size_t k) const;    // * z^k, same order
  TruncatedSeries shift_down(std::size_t k) const;  // / z^k, order - k
  TruncatedSeries derivative() const;               // order - 1

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& s);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }
  TruncatedSeries operator-() const;

  // Exact equality: same order, same coefficients.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  std::string str(std::size_t max_terms = 12) const;

 private:
  std::vector<Rational> c_;
};

// Compare at min(order(a), order(b)).
bool agree(const TruncatedSeries& a, const TruncatedSeries& b);
// First index where a and b differ below the common order, or -1.
long first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

enum class SeriesOp { add, sub, mul };
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);

// a / b; cancels a common z^k when [z^0]b == 0 (result order drops by k).
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);
inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_div(a, b);
}
TruncatedSeries series_inverse(const TruncatedSeries& a);
TruncatedSeries series_sqrt(const TruncatedSeries& a);
TruncatedSeries series_pow_int(const TruncatedSeries& a, long k);
// a^e for [z^0]a == 1 and rational e (coefficient recurrence).
TruncatedSeries series_pow_rational(const TruncatedSeries& a, const Rational& e);
// f(g) with [z^0]g == 0.
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);

}  // namespace embtree
