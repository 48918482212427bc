#pragma once

#include <optional>
#include <string>
#include <vector>

#include "embtree/rational.hpp"
#include "embtree/series.hpp"

namespace embtree {

enum class WalkMode { lock_step, random_turn };
enum class WalkSteps { dyck, motzkin };
enum class WalkBoundary { vicious, osculating, updown };

struct WalkerModel {
  WalkMode mode = WalkMode::lock_step;
  WalkSteps steps = WalkSteps::dyck;
  WalkBoundary boundary = WalkBoundary::vicious;
  // Lock-step refinement: u per touching pair per time, w per shared edge.
  std::optional<std::pair<Rational, Rational>> marks;
  std::string str() const;
};

// X = z(2 + (2+w) X + 2 X^2)
TruncatedSeries lockstep_X(const Rational& w, std::size_t order);
// 1/(1 - z(w+6))
TruncatedSeries lockstep_T(const Rational& w, std::size_t order);

struct StarCoefficients {
  TruncatedSeries alpha, beta, gamma;
};

// T (1 - a X^i - b X^j - c X^{i+j}); i, j may be -1 (boundary rows).
TruncatedSeries lockstep_general(const Rational& w, int i, int j, const StarCoefficients& abc, std::size_t order);
// Interior equation residual at (i, j), i, j >= 1: zero for every choice of coefficients.
TruncatedSeries lockstep_interior_residual(const Rational& w, int i, int j, const StarCoefficients& abc,
                                           std::size_t order);
// Adapted coefficients at w = 2; boundary equations checked for gaps 0..j_check.
StarCoefficients lockstep_adapt(WalkBoundary boundary, std::size_t order, int j_check = 5);
TruncatedSeries lockstep_gf(WalkBoundary boundary, int i, int j, std::size_t order);
TruncatedSeries lockstep_refined(const Rational& u, const Rational& w, int i, int j, std::size_t order);

// X for the random-turn systems: Dyck 2z(1+X+X^2), Motzkin z(2+5X+2X^2).
TruncatedSeries randomturn_X(WalkSteps steps, std::size_t order);
TruncatedSeries randomturn_gf(WalkSteps steps, WalkBoundary boundary, int i, int j, std::size_t order);

std::vector<Rational> walker_dp(const WalkerModel& model, int i, int j, std::size_t order);

enum class QuarterPlane { S1, S2 };
TruncatedSeries quarterplane_X(QuarterPlane m, std::size_t order);
TruncatedSeries quarterplane_gf(QuarterPlane m, int i, int j, std::size_t order);
std::vector<Rational> quarterplane_dp(QuarterPlane m, int i, int j, std::size_t order);

}  // namespace embtree
