#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "embtree/rational.hpp"

namespace embtree {

struct Step {
  int jump;
  Rational weight;
};

// Weighted one-dimensional step set. c = -min jump, d = max jump.
class StepSet {
 public:
  explicit StepSet(std::vector<Step> steps);
  // "b:w,b:w,..." with w an exact rational ("1", "3/2").
  static StepSet parse(std::string_view text);
  static StepSet dyck();
  static StepSet motzkin();

  const std::vector<Step>& steps() const { return steps_; }
  int c() const { return c_; }
  int d() const { return d_; }
  Rational weight_sum() const;  // P(1)
  std::string str() const;

 private:
  std::vector<Step> steps_;
  int c_ = 0, d_ = 0;
};

}  // namespace embtree
