#pragma once

#include <string>
#include <utility>
#include <vector>

#include "embtree/rational.hpp"

namespace embtree {

// Dense univariate polynomial over Q; index k holds [X^k].
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c);
  UniPoly(const Rational& c);  // NOLINT: constants promote
  static UniPoly from_ints(std::initializer_list<long> c);
  static UniPoly x_pow(int k, const Rational& c = 1);
  // 1 - X^k, the building block of every closed form here.
  static UniPoly one_minus_x_pow(int k);
  static UniPoly cyclotomic(int m);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& lead() const { return c_.back(); }
  Rational evaluate(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly pow(unsigned k) const;
  UniPoly monic() const;
  std::string str(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic, gcd(0,0) = 0
// Returns (g, s) with s*a == g mod b.
std::pair<UniPoly, UniPoly> half_ext_gcd(const UniPoly& a, const UniPoly& b);

// Reduced quotient of univariate polynomials, monic denominator.
class UniRatFunc {
 public:
  UniRatFunc(const UniPoly& num = UniPoly(), const UniPoly& den = UniPoly(Rational(1)));
  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  friend UniRatFunc operator+(const UniRatFunc& a, const UniRatFunc& b);
  friend UniRatFunc operator-(const UniRatFunc& a, const UniRatFunc& b);
  friend UniRatFunc operator*(const UniRatFunc& a, const UniRatFunc& b);
  friend UniRatFunc operator/(const UniRatFunc& a, const UniRatFunc& b);
  friend bool operator==(const UniRatFunc& a, const UniRatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  // X^k with k possibly negative.
  static UniRatFunc x_pow(int k);
  std::string str() const;

 private:
  UniPoly num_, den_;
};

}  // namespace embtree
