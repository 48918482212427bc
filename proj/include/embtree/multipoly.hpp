#pragma once

#include <map>
#include <string>
#include <vector>

#include "embtree/rational.hpp"
#include "embtree/series.hpp"

namespace embtree {

using Exponents = std::vector<int>;

// Sparse multivariate Laurent polynomial over Q. Exponents may be
// negative; that keeps identities with X^{-o} shifts inside one ring.
class MultiPoly {
 public:
  explicit MultiPoly(std::vector<std::string> vars);
  static MultiPoly constant(const std::vector<std::string>& vars, const Rational& c);
  static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name);
  static MultiPoly monomial(const std::vector<std::string>& vars, Exponents e, const Rational& c);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree_in(std::size_t var) const;
  int min_degree_in(std::size_t var) const;
  int total_degree() const;
  Rational coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned k) const;
  // Multiply by prod vars^shift.
  MultiPoly shifted(const Exponents& shift) const;
  // Replace variable `name` by `value` (a polynomial in the same ring).
  MultiPoly substitute(const std::string& name, const MultiPoly& value) const;
  // Every exponent must be >= 0 after substitution of series.
  TruncatedSeries eval_series(const std::map<std::string, TruncatedSeries>& assignment) const;

  std::string str() const;

 private:
  void check_same(const MultiPoly& o) const;
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

enum class PolyOp { add, sub, mul };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

class RationalFunction {
 public:
  RationalFunction(MultiPoly num, MultiPoly den);
  explicit RationalFunction(MultiPoly num);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const std::vector<std::string>& variables() const { return num_.variables(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction pow(unsigned k) const;
  RationalFunction substitute(const std::string& name, const MultiPoly& value) const;

  // num(a) den(b) - num(b) den(a); zero iff a == b.
  friend MultiPoly cross_residual(const RationalFunction& a, const RationalFunction& b);

 private:
  MultiPoly num_, den_;
};

bool rf_equal(const RationalFunction& a, const RationalFunction& b);
TruncatedSeries rf_eval_series(const RationalFunction& f,
                               const std::map<std::string, TruncatedSeries>& assignment);

}  // namespace embtree
