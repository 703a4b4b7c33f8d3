#pragma once

#include "lgfo/optimizer.hpp"

namespace lgfo {

struct OracleResult {
  ThresholdPair optimal;
  std::size_t optimal_index;
  std::vector<CostCurve> per_measure_curves;  // canonical measure order
  CostCurve summed_curve;
  std::map<Measure, std::vector<double>> measure_values;
};

// Exhaustive reference evaluation of every candidate by direct definition.
// Recomputes all counts per example through predict alone, sharing no
// evaluation code with per_measure_cost, and must agree with minimize_lgfo
// bit for bit on the same candidate set. Intended for tests.
OracleResult brute_force_oracle(const Dataset& dataset,
                                const CandidateSet& candidates,
                                const std::vector<Measure>& measures,
                                const MeasureWeights& weights,
                                const CostModel& costs);

}  // namespace lgfo
