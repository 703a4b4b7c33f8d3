#pragma once

#include "lgfo/candidates.hpp"
#include "lgfo/cost_model.hpp"
#include "lgfo/measures.hpp"

#include <map>

namespace lgfo {

// Cost values aligned index-for-index with a CandidateSet. A per-measure
// curve is the total misclassification cost of each candidate relative to
// that measure's own optimum and is exactly 0 there.
struct CostCurve {
  enum class Kind { PerMeasure, Summed };
  Kind kind = Kind::Summed;
  std::optional<Measure> measure;  // set for per-measure curves
  std::size_t optimum_index = 0;   // s_min for per-measure, argmin for summed
  std::vector<double> costs;
};

// Index of the first minimum (canonical-order tie break).
std::size_t first_argmin(const std::vector<double>& values);

// p2n if yhat_i - yhat_j = 1, n2p if -1, else 0.
double misclassification_cost(int yhat_i, int yhat_j, const CostModel& costs);

// Measure value at every candidate, index-aligned.
std::vector<double> measure_values(const Dataset& dataset,
                                   const CandidateSet& candidates, Measure m);

CostCurve per_measure_cost(const Dataset& dataset,
                           const CandidateSet& candidates, Measure m,
                           const CostModel& costs);

// Weighted sum of per-measure curves over one shared candidate set.
CostCurve lgfo_objective(const std::vector<CostCurve>& per_measure_curves,
                         const MeasureWeights& weights);

struct LgfoResult {
  ThresholdPair optimal;
  std::size_t optimal_index;
  CandidateSet candidates;
  std::vector<CostCurve> per_measure_curves;  // canonical measure order
  CostCurve summed_curve;
  ThresholdPair baseline;
  std::map<Measure, MeasureValue> at_optimal;   // all measures
  std::map<Measure, MeasureValue> at_baseline;  // all measures
  double accuracy_at_optimal = 0.0;
  double accuracy_at_baseline = 0.0;
};

// End-to-end objective minimization: enumerate candidates under the target
// positives constraint, build per-measure cost curves, combine them with the
// weights and return the first candidate attaining the minimal summed cost.
LgfoResult minimize_lgfo(const Dataset& dataset,
                         const std::vector<Measure>& measures,
                         const MeasureWeights& weights, const CostModel& costs,
                         long target_positives, double grid_step,
                         const ThresholdPair& baseline = ThresholdPair(0.5,
                                                                       0.5));

struct SensitivityPoint {
  double measure_value;
  double cost;
};

// (measure value, per-measure cost) per candidate, sorted by measure value.
std::vector<SensitivityPoint> cost_sensitivity(const Dataset& dataset,
                                               const CandidateSet& candidates,
                                               Measure m,
                                               const CostModel& costs);

}  // namespace lgfo
