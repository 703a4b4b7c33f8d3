#include "lgfo/candidates.hpp"

#include "grid_counts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lgfo {
namespace {

int snap_to_grid(double t, int steps) {
  const long long i = std::llround(t * steps);
  if (i < 0 || i > steps ||
      std::fabs(detail::grid_value(int(i), steps) - t) > 1e-9)
    throw std::invalid_argument("threshold " + std::to_string(t) +
                                " is not on the grid");
  return int(i);
}

}  // namespace

int grid_steps_from_step(double grid_step) {
  if (!(grid_step > 0.0 && grid_step <= 1.0))
    throw std::invalid_argument("grid_step must be in (0,1]");
  const long long steps = std::llround(1.0 / grid_step);
  if (steps < 1 || std::fabs(double(steps) * grid_step - 1.0) > 1e-9)
    throw std::invalid_argument("grid_step must evenly divide 1");
  return int(steps);
}

CandidateSet CandidateSet::from_pairs(const std::vector<ThresholdPair>& pairs,
                                      double grid_step, long target_positives) {
  if (pairs.empty()) throw std::invalid_argument("candidate set is empty");
  CandidateSet set;
  set.grid_step_ = grid_step;
  set.steps_ = grid_steps_from_step(grid_step);
  set.target_positives_ = target_positives;
  set.idx_.reserve(pairs.size());
  for (const ThresholdPair& p : pairs)
    set.idx_.emplace_back(snap_to_grid(p.t0, set.steps_),
                          snap_to_grid(p.t1, set.steps_));
  set.canonicalize();
  return set;
}

void CandidateSet::canonicalize() {
  std::sort(idx_.begin(), idx_.end(),
            [](const std::pair<int, int>& a, const std::pair<int, int>& b) {
              const int da = a.first - a.second;
              const int db = b.first - b.second;
              if (da != db) return da < db;
              return a.first < b.first;
            });
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
  pairs_.clear();
  pairs_.reserve(idx_.size());
  for (const auto& [i0, i1] : idx_)
    pairs_.emplace_back(detail::grid_value(i0, steps_),
                        detail::grid_value(i1, steps_));
}

CandidateSet get_thresholds(const Dataset& dataset, long target_positives,
                            double grid_step) {
  const int steps = grid_steps_from_step(grid_step);
  if (target_positives < 0 || target_positives > long(dataset.size()))
    throw std::invalid_argument(
        "target_positives out of range [0, dataset size]");

  const detail::GridCounts gc = detail::build_grid_counts(dataset, steps);
  CandidateSet set;
  set.grid_step_ = grid_step;
  set.steps_ = steps;
  set.target_positives_ = target_positives;
  set.idx_.reserve(2 * std::size_t(steps + 1));

  for (int t = 0; t <= steps; ++t) {
    // Row sweep (t, t1): within a row, canonical order is descending t1.
    int best_j = steps;
    long best_dev = std::labs(gc.pos[0][t] + gc.pos[1][steps] -
                              target_positives);
    for (int j = steps - 1; j >= 0; --j) {
      const long dev =
          std::labs(gc.pos[0][t] + gc.pos[1][j] - target_positives);
      if (dev < best_dev) {
        best_dev = dev;
        best_j = j;
      }
    }
    set.idx_.emplace_back(t, best_j);

    // Column sweep (t0, t): within a column, canonical order is ascending t0.
    int best_i = 0;
    best_dev = std::labs(gc.pos[0][0] + gc.pos[1][t] - target_positives);
    for (int i = 1; i <= steps; ++i) {
      const long dev =
          std::labs(gc.pos[0][i] + gc.pos[1][t] - target_positives);
      if (dev < best_dev) {
        best_dev = dev;
        best_i = i;
      }
    }
    set.idx_.emplace_back(best_i, t);
  }

  set.canonicalize();
  return set;
}

}  // namespace lgfo
