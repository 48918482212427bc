#pragma once

#include <optional>
#include <string>
#include <vector>

#include "embtree/rational.hpp"
#include "embtree/series.hpp"

namespace embtree {

// Laurent polynomial in one marker variable m, dense on [lo, hi].
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int k, const Rational& c);

  bool is_zero() const { return c_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }  // lo-1 when zero
  Rational coeff(int k) const;
  void add(int k, const Rational& v);
  void drop_above(int cap);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& s);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.lo_ == b.lo_);
  }

  Rational evaluate(const Rational& m) const;
  std::string str(const std::string& var = "v") const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<Rational> c_;
};

// Series in z (mod z^order) with LaurentPoly coefficients. An optional
// marker cap drops all marker exponents above it; a capped value must keep
// non-negative marker support so that truncation stays multiplicative.
class LaurentBiSeries {
 public:
  explicit LaurentBiSeries(std::size_t order, std::optional<int> marker_cap = std::nullopt);
  static LaurentBiSeries from_series(const TruncatedSeries& s, std::optional<int> cap = std::nullopt);
  static LaurentBiSeries marker_power(int k, std::size_t order, std::optional<int> cap = std::nullopt);
  // s(z) * m^k
  static LaurentBiSeries series_times_marker(const TruncatedSeries& s, int k,
                                             std::optional<int> cap = std::nullopt);

  std::size_t order() const { return rows_.size(); }
  std::optional<int> marker_cap() const { return cap_; }
  const LaurentPoly& row(std::size_t n) const { return rows_.at(n); }
  Rational coeff(std::size_t n, int k) const { return rows_.at(n).coeff(k); }
  void add(std::size_t n, int k, const Rational& v);
  bool is_zero() const;

  LaurentBiSeries& operator+=(const LaurentBiSeries& o);
  LaurentBiSeries& operator-=(const LaurentBiSeries& o);
  LaurentBiSeries& operator*=(const Rational& s);
  friend LaurentBiSeries operator+(LaurentBiSeries a, const LaurentBiSeries& b) { return a += b; }
  friend LaurentBiSeries operator-(LaurentBiSeries a, const LaurentBiSeries& b) { return a -= b; }
  friend LaurentBiSeries operator*(const LaurentBiSeries& a, const LaurentBiSeries& b);
  friend LaurentBiSeries operator*(LaurentBiSeries a, const Rational& s) { return a *= s; }
  friend bool operator==(const LaurentBiSeries& a, const LaurentBiSeries& b) { return a.rows_ == b.rows_; }

  // Row 0 must be a single monomial c m^k.
  LaurentBiSeries inverse() const;
  LaurentBiSeries truncate(std::size_t n) const;

  TruncatedSeries extract(int marker_power) const;
  // Substitute a rational for the marker; refused on capped values.
  TruncatedSeries evaluate_marker(const Rational& m) const;

 private:
  void enforce_cap();
  std::vector<LaurentPoly> rows_;
  std::optional<int> cap_;
};

enum class BisOp { add, sub, mul };
LaurentBiSeries bis_arith(const LaurentBiSeries& a, const LaurentBiSeries& b, BisOp op);
inline TruncatedSeries bis_extract(const LaurentBiSeries& a, int marker_power) {
  return a.extract(marker_power);
}

}  // namespace embtree
