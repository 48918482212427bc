#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "embtree/biseries.hpp"
#include "embtree/multipoly.hpp"
#include "embtree/rational.hpp"
#include "embtree/series.hpp"

namespace embtree {

struct BinaryWeights {
  Rational v1, v2, w1, w2, w3;
  // "v1,v2,w1,w2,w3"
  static BinaryWeights parse(std::string_view text);
  std::string str() const;
};

enum class Boundary { one, zero };  // T_{-1} = 1 or T_{-1} = 0

// Rows j = j_min .. j_max of a table of series.
struct TjTable {
  int j_min = -1;
  std::vector<TruncatedSeries> rows;
  const TruncatedSeries& at(int j) const { return rows.at(static_cast<std::size_t>(j - j_min)); }
  int j_max() const { return j_min + static_cast<int>(rows.size()) - 1; }
};

enum class AlphaMode { recurrence, w2w3_closed, w3_only_closed };

struct AlphaTable {
  AlphaMode mode;
  std::vector<TruncatedSeries> values;  // alpha_1 .. alpha_nmax, alpha_1 = 1
  const TruncatedSeries& alpha(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
};

TruncatedSeries binary_T(const BinaryWeights& w, std::size_t order);
TruncatedSeries binary_X(const BinaryWeights& w, std::size_t order);
// T through the polynomials t1(X), t2(X) after substituting X(z).
TruncatedSeries binary_T_from_X(const BinaryWeights& w, const TruncatedSeries& X);
// Residual of 1 = z(v1(1/X+X)+v2) + zT(w1(1/X+X) + 2w2 + w3(1/X+2+X)), times X.
TruncatedSeries binary_characteristic_residual(const BinaryWeights& w, const TruncatedSeries& T,
                                               const TruncatedSeries& X);

TjTable binary_Tj_recurrence(const BinaryWeights& w, Boundary boundary, int j_max, std::size_t order);

AlphaTable binary_alpha(const BinaryWeights& w, int n_max, std::size_t order, AlphaMode mode);

// T_j from the one-parameter solution at a concrete lambda series.
TruncatedSeries binary_Tj_closed(const BinaryWeights& w, const TruncatedSeries& lambda, int j, std::size_t order);
// Same with a symbolic marker mu where lambda = X^3 mu; valid for j >= -2, marker degree <= cap.
LaurentBiSeries binary_Tj_symbolic(const BinaryWeights& w, int j, std::size_t order, int cap);
// LHS - RHS of the T_j recurrence on symbolic solutions, for one j.
LaurentBiSeries binary_symbolic_residual(const BinaryWeights& w, int j, std::size_t order, int cap);

TruncatedSeries adapt_lambda(const BinaryWeights& w, Boundary boundary, std::size_t order);

struct ConjectureReport {
  int n_max = 0;
  std::size_t order = 0;
  std::vector<MultiPoly> p;     // p_1 .. p_nmax
  std::vector<bool> agrees;     // per n
  std::string status;           // "conjecture-consistent" or "mismatch at n=..."
};
std::vector<MultiPoly> conjecture_polynomials(int n_max);
ConjectureReport conjecture_check(int n_max, std::size_t order = 40, const Rational& v1 = 1,
                                  const Rational& v2 = 1);

// Height family: T_j = 1 + z(v1 T_{j-1} + v2 T_j) + z T_{j-1} T_j.
TruncatedSeries height_T(const Rational& v1, const Rational& v2, std::size_t order);
TruncatedSeries height_X(const Rational& v1, const Rational& v2, std::size_t order);
TruncatedSeries height_Tj(const Rational& v1, const Rational& v2, const TruncatedSeries& lambda, int j,
                          std::size_t order);
TruncatedSeries height_plane_trees(int j, std::size_t order);
AlphaTable height_alpha(const Rational& v1, const Rational& v2, int n_max, std::size_t order, bool closed);

// Ternary family T = 1 + z(2v1+v2)T + zT^3.
TruncatedSeries ternary_T(const Rational& v1, const Rational& v2, std::size_t order);
TruncatedSeries ternary_X(const Rational& v1, const Rational& v2, std::size_t order);
AlphaTable ternary_alpha(const Rational& v1, const Rational& v2, int n_max, std::size_t order);

// Plug rho_j = sum alpha_n (X^j)^n into the unlinearized recurrence and
// return the largest Y-degree / z-index pair that fails, or (-1,-1).
struct ResidualProbe {
  int y_degree = -1;
  long z_index = -1;
  bool ok() const { return y_degree < 0; }
};
ResidualProbe binary_main_residual(const BinaryWeights& w, const AlphaTable& a, std::size_t order);
ResidualProbe ternary_main_residual(const Rational& v1, const Rational& v2, const AlphaTable& a,
                                    std::size_t order);
ResidualProbe height_main_residual(const Rational& v1, const Rational& v2, const AlphaTable& a,
                                   std::size_t order);

// Exhaustive oracles.
std::vector<Rational> brute_force_embedded_binary(const BinaryWeights& w, int j, int n_max,
                                                  Boundary boundary = Boundary::one);
std::vector<Rational> brute_force_plane_tree_height(int j, int n_max);

}  // namespace embtree
