#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "embtree/binary.hpp"
#include "embtree/kernel.hpp"
#include "embtree/multipoly.hpp"
#include "embtree/puiseux.hpp"
#include "embtree/series.hpp"
#include "embtree/unipoly.hpp"

namespace embtree {

enum class DaryKind { odd, even };  // arity 2d+1 or 2d

struct DaryFamily {
  DaryKind kind = DaryKind::odd;
  int d = 1;

  int arity() const { return kind == DaryKind::odd ? 2 * d + 1 : 2 * d; }
  std::vector<int> offsets() const;       // child label increments
  int small_branches() const { return kind == DaryKind::odd ? d : 2 * d - 1; }
  int boundary_depth() const { return small_branches(); }  // T_{-1..-depth} = 1
  std::string str() const;                // "odd:2"
  static DaryFamily parse(std::string_view text);
};

TruncatedSeries dary_T(const DaryFamily& fam, std::size_t order);
TjTable dary_Tj_recurrence(const DaryFamily& fam, int j_max, std::size_t order);

// Z = z T^{arity-1} as a series in z.
TruncatedSeries dary_Z(const DaryFamily& fam, std::size_t order);
// X^c - Z sum_o X^{c+o}, Z substituted.
SeriesPoly dary_characteristic_polynomial(const DaryFamily& fam, std::size_t order);
SmallFactor dary_char_factor(const DaryFamily& fam, std::size_t order);

struct DaryParametrization {
  RationalFunction Z_of_X, T_of_X, z_of_X;  // ring Q[X^{+-1}]
};
DaryParametrization dary_rational_parametrization(const DaryFamily& fam);
// Zero iff T - 1 - z T^arity and 1 - Z sum X^o vanish identically.
bool parametrization_consistent(const DaryFamily& fam, const DaryParametrization& p);

// T_j with X^j replaced by Y; variables X, L (the parameter), Y.
RationalFunction lemma_one_param_solution(const DaryFamily& fam);

struct IdentityCheck {
  bool ok = false;
  std::size_t residual_terms = 0;
  std::string residual;  // empty when ok, else a prefix of the residual polynomial
};
IdentityCheck verify_one_param(const DaryFamily& fam);

// alpha_1 = 1; closed form and the single-branch recurrence, both in Q(X).
std::vector<UniRatFunc> dary_alpha_one_param(const DaryFamily& fam, int n_max);
std::vector<UniRatFunc> dary_alpha_one_param_recurrence(const DaryFamily& fam, int n_max);

// Multi-index coefficients over conjugate branches X_l(s) = X_1(w^{l-1} s), Z = s^c.
struct MultiAlphaTable {
  DaryFamily family;
  int bound = 0;
  FieldPtr field;
  std::vector<PSeries> branches;             // X_1 .. X_c
  std::map<std::vector<int>, PSeries> entries;  // |n| in 1..bound
  const PSeries& at(const std::vector<int>& n) const { return entries.at(n); }
};

// Small branches as Laurent series in s, relative precision `prec`.
std::vector<PSeries> dary_branches(const DaryFamily& fam, const FieldPtr& field, int prec);

// Seeds are z-series; empty means alpha_{e_l} = 1 for all l.
MultiAlphaTable dary_alpha_general(const DaryFamily& fam, int bound, const std::vector<TruncatedSeries>& seeds,
                                   int s_prec);

struct PropReport {
  bool ok = false;
  int bound = 0;
  std::size_t order = 0;     // z-order requested
  int achieved_s_prec = 0;   // residual known modulo s^this
  bool axis_closed_form = false;  // alpha_{n e_l} equal the one-parameter closed form
  bool hensel_agrees = false;     // branch symmetric functions equal the Hensel factor
  std::string detail;
};
PropReport verify_prop_main_equation(const DaryFamily& fam, int bound, std::size_t order,
                                     const std::vector<TruncatedSeries>& seeds = {});

std::vector<Rational> brute_force_dary(const DaryFamily& fam, int j, int n_max);

}  // namespace embtree
