#pragma once

#include "lgfo/types.hpp"

namespace lgfo {

// Number of grid intervals for a spacing; grid values are i/steps for
// i = 0..steps. Rejects spacings that do not evenly divide 1.
int grid_steps_from_step(double grid_step);

// Threshold pairs restricted to a regular grid, held in canonical order:
// ascending by (t0 - t1), ties broken by ascending t0, deduplicated. The
// position of a pair in this order is its threshold-pair index.
class CandidateSet {
 public:
  static CandidateSet from_pairs(const std::vector<ThresholdPair>& pairs,
                                 double grid_step, long target_positives);

  std::size_t size() const { return pairs_.size(); }
  const std::vector<ThresholdPair>& pairs() const { return pairs_; }
  const ThresholdPair& pair(std::size_t i) const { return pairs_[i]; }
  int index_t0(std::size_t i) const { return idx_[i].first; }
  int index_t1(std::size_t i) const { return idx_[i].second; }
  double grid_step() const { return grid_step_; }
  int steps() const { return steps_; }
  long target_positives() const { return target_positives_; }

 private:
  CandidateSet() = default;
  friend CandidateSet get_thresholds(const Dataset&, long, double);
  void canonicalize();

  std::vector<std::pair<int, int>> idx_;
  std::vector<ThresholdPair> pairs_;
  double grid_step_ = 0.0;
  int steps_ = 0;
  long target_positives_ = 0;
};

// For every grid value t, keeps the pair (t, t1) whose positive count is
// closest to the target over all grid t1, and likewise (t0, t) over all grid
// t0. Ties pick the pair that comes first in canonical order. The union is
// deduplicated and canonically ordered; at most 2*(steps+1) candidates.
CandidateSet get_thresholds(const Dataset& dataset, long target_positives,
                            double grid_step);

}  // namespace lgfo
