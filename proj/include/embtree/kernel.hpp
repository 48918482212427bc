#pragma once

#include <utility>
#include <vector>

#include "embtree/rational.hpp"
#include "embtree/series.hpp"
#include "embtree/steps.hpp"

namespace embtree {

// Polynomial in X whose coefficients are series in z of one common order.
class SeriesPoly {
 public:
  SeriesPoly(std::vector<TruncatedSeries> coeffs);  // NOLINT
  static SeriesPoly zero(std::size_t order);
  static SeriesPoly x_pow(int k, std::size_t order);

  std::size_t order() const { return order_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  TruncatedSeries coeff(int k) const;
  const std::vector<TruncatedSeries>& coeffs() const { return c_; }

  SeriesPoly& operator+=(const SeriesPoly& o);
  SeriesPoly& operator-=(const SeriesPoly& o);
  friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) { return a += b; }
  friend SeriesPoly operator-(SeriesPoly a, const SeriesPoly& b) { return a -= b; }
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator*(const TruncatedSeries& s, const SeriesPoly& p);
  friend bool operator==(const SeriesPoly& a, const SeriesPoly& b) { return a.c_ == b.c_; }

  TruncatedSeries eval(const TruncatedSeries& x) const;
  SeriesPoly derivative() const;
  SeriesPoly truncate(std::size_t order) const;
  SeriesPoly zero_extended(std::size_t order) const;

 private:
  void trim();
  std::vector<TruncatedSeries> c_;
  std::size_t order_;
};

// (quotient, remainder) for a monic divisor.
std::pair<SeriesPoly, SeriesPoly> divrem_monic(const SeriesPoly& a, const SeriesPoly& monic);

// Root of `equation` (a polynomial in the unknown) with constant term t0.
TruncatedSeries newton_solve(const SeriesPoly& equation, const Rational& t0, std::size_t order);

Rational fuss_catalan(long n, long d);

// Monic degree-c factor prod (X - X_l) of the small branches.
struct SmallFactor {
  int c = 0;
  std::vector<TruncatedSeries> elementary;  // e_1..e_c

  std::size_t order() const { return elementary.front().order(); }
  SeriesPoly polynomial() const;           // A(X) = X^c - e1 X^{c-1} + ...
  TruncatedSeries value_at_one() const;    // A(1) = prod (1 - X_l)
};

struct HenselResult {
  SmallFactor small;
  SeriesPoly cofactor;  // B with A*B == F
};

// F must reduce to b0 X^c (b0 a nonzero rational) at z = 0.
HenselResult hensel_lift(const SeriesPoly& f, int c, std::size_t order);
// X^c - z X^c P(X).
SeriesPoly characteristic_polynomial(const StepSet& steps, std::size_t order);
SmallFactor hensel_small_factor(const StepSet& steps, std::size_t order);

std::vector<TruncatedSeries> complete_homogeneous(const SmallFactor& sf, int f_max);
std::vector<TruncatedSeries> power_sums(const SmallFactor& sf, int k_max);  // p_1..p_kmax

}  // namespace embtree
