#pragma once

#include <string>
#include <vector>

#include "embtree/biseries.hpp"
#include "embtree/kernel.hpp"
#include "embtree/series.hpp"
#include "embtree/steps.hpp"

namespace embtree {

// 1/(1 - z P(1))
TruncatedSeries walks_total(const StepSet& s, std::size_t order);

struct MeanderGF {
  int start_level = 0;
  TruncatedSeries plain;
  LaurentBiSeries marked;  // marker exponent = final level
};

MeanderGF meander_gf(const StepSet& s, int j, std::size_t order);
// Plain series only; skips the biseries work.
TruncatedSeries meander_plain(const StepSet& s, int j, std::size_t order);
// Paths from level j back to level j, never below 0.
TruncatedSeries excursion_gf(const StepSet& s, int j, std::size_t order);

struct MeanderTable {
  std::vector<Rational> plain;                  // plain[n]
  std::vector<std::vector<Rational>> endpoint;  // endpoint[n][k], k = final level
};
MeanderTable meander_dp(const StepSet& s, int j, std::size_t order);

struct MeanderCheck {
  bool ok = true;
  std::string detail;  // first mismatch
};
MeanderCheck verify_meander_theorem(const StepSet& s, int j_max, std::size_t order);

}  // namespace embtree
