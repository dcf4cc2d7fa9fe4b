#pragma once

#include <vector>

#include "vk/diagram.hpp"

namespace vk {

// Disjoint sets of chords to virtualize and to crossing-change.
struct UnknottingPlan {
  std::vector<int> virtualize;
  std::vector<int> change;
  bool operator==(const UnknottingPlan&) const = default;
};

UnknottingIndex plan_cost(const UnknottingPlan& plan);

// Changed chords flipped, virtualized chords deleted; the operations commute
// on disjoint chords so the result is order-independent.
GaussDiagram apply_plan(const GaussDiagram& d, const UnknottingPlan& plan);

}  // namespace vk
