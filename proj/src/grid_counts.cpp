#include "grid_counts.hpp"

namespace lgfo::detail {

GridCounts build_grid_counts(const Dataset& dataset, int steps) {
  GridCounts gc;
  gc.steps = steps;
  for (int g : {0, 1}) {
    gc.pos[g].assign(std::size_t(steps) + 1, 0);
    gc.tp[g].assign(std::size_t(steps) + 1, 0);
  }
  for (const ScoredExample& ex : dataset.examples()) {
    ++gc.group_size[ex.group];
    gc.label_positives[ex.group] += ex.label;
  }
  for (int i = 0; i <= steps; ++i) {
    const double threshold = grid_value(i, steps);
    for (const ScoredExample& ex : dataset.examples()) {
      if (ex.score >= threshold) {
        ++gc.pos[ex.group][i];
        gc.tp[ex.group][i] += ex.label;
      }
    }
  }
  return gc;
}

GroupConfusion confusion_at(const GridCounts& gc, int i0, int i1) {
  GroupConfusion counts;
  const std::array<int, 2> idx = {i0, i1};
  for (int g : {0, 1}) {
    ConfusionCounts& c = counts.group[g];
    c.tp = gc.tp[g][idx[g]];
    c.fp = gc.pos[g][idx[g]] - c.tp;
    c.fn = gc.label_positives[g] - c.tp;
    c.tn = (gc.group_size[g] - gc.label_positives[g]) - c.fp;
  }
  return counts;
}

}  // namespace lgfo::detail
