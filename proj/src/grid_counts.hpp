#pragma once

#include "lgfo/measures.hpp"
#include "lgfo/types.hpp"

#include <array>
#include <vector>

namespace lgfo::detail {

inline double grid_value(int i, int steps) { return double(i) / double(steps); }

// Cumulative per-group counts at every grid threshold:
// pos[g][i] = #{x in group g : x.score >= i/steps}, tp likewise for label 1.
// Uses the same >= comparison on the same grid doubles as predict.
struct GridCounts {
  int steps = 0;
  std::array<std::vector<long>, 2> pos;
  std::array<std::vector<long>, 2> tp;
  std::array<long, 2> group_size{0, 0};
  std::array<long, 2> label_positives{0, 0};
};

GridCounts build_grid_counts(const Dataset& dataset, int steps);

// Confusion for the candidate whose grid indices are (i0, i1).
GroupConfusion confusion_at(const GridCounts& gc, int i0, int i1);

}  // namespace lgfo::detail
