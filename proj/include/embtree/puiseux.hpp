#pragma once

#include <memory>
#include <string>
#include <vector>

#include "embtree/rational.hpp"
#include "embtree/series.hpp"
#include "embtree/unipoly.hpp"

namespace embtree {

// Q(w) for a primitive m-th root of unity w, basis 1, w, ..., w^{phi-1}.
class CycloField {
 public:
  explicit CycloField(int m);
  int m() const { return m_; }
  int degree() const { return phi_; }
  const UniPoly& modulus() const { return mod_; }
  // w^k reduced, k >= 0.
  const std::vector<Rational>& power_basis(int k) const { return red_[static_cast<std::size_t>(k)]; }

 private:
  int m_, phi_;
  UniPoly mod_;
  std::vector<std::vector<Rational>> red_;  // w^0 .. w^{2 phi - 2}
};

using FieldPtr = std::shared_ptr<const CycloField>;

class Cyclo {
 public:
  Cyclo(FieldPtr f, const Rational& r = Rational());
  static Cyclo root_power(FieldPtr f, int k);  // w^k, any integer k

  const FieldPtr& field() const { return f_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational() const;  // requires is_rational()

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  Cyclo operator-() const;
  Cyclo inverse() const;
  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }
  std::string str() const;

 private:
  FieldPtr f_;
  std::vector<Rational> c_;
};

// Laurent series in s over Q(w), known modulo s^{val + size}.
class PSeries {
 public:
  PSeries(FieldPtr f, int val, std::vector<Cyclo> coeffs);
  static PSeries zero(FieldPtr f, int abs_prec);
  static PSeries constant(FieldPtr f, const Rational& c, int rel_prec);
  // From a rational series in s^step: sum a_k s^{step k}.
  static PSeries from_series(FieldPtr f, const TruncatedSeries& a, int step = 1);

  const FieldPtr& field() const { return f_; }
  int valuation() const { return val_; }
  int abs_prec() const { return val_ + static_cast<int>(c_.size()); }
  int rel_prec() const { return static_cast<int>(c_.size()); }
  bool is_zero() const { return c_.empty(); }  // zero to abs_prec
  Cyclo coeff(int k) const;                      // k < abs_prec

  PSeries& operator+=(const PSeries& o);
  PSeries& operator-=(const PSeries& o);
  friend PSeries operator+(PSeries a, const PSeries& b) { return a += b; }
  friend PSeries operator-(PSeries a, const PSeries& b) { return a -= b; }
  friend PSeries operator*(const PSeries& a, const PSeries& b);
  friend PSeries operator*(const Cyclo& k, PSeries a);
  PSeries operator-() const;
  PSeries inverse() const;
  PSeries pow(int k) const;  // negative k allowed for units
  // s -> w^k s
  PSeries twisted(int k) const;
  PSeries with_abs_prec(int p) const;
  // Rational series in Z = s^step; throws if a coefficient is irrational or off the lattice.
  TruncatedSeries to_series(int step) const;

 private:
  void normalize();
  FieldPtr f_;
  int val_;
  std::vector<Cyclo> c_;
};

}  // namespace embtree
