#pragma once

#include "lgfo/config.hpp"
#include "lgfo/optimizer.hpp"

namespace lgfo {

// Optimization result plus the effective (post-default) configuration and
// per-candidate measure values for the optimized measures.
struct Report {
  std::vector<Measure> measures;
  MeasureWeights weights;
  CostModel costs;
  long target_positives;
  double grid_step;
  ThresholdPair baseline;
  LgfoResult result;
  std::map<Measure, std::vector<double>> measure_values;
};

Report run(const Dataset& dataset, const RunConfig& config);

std::string report_to_json(const Report& report);

// Plot-ready table: index, t0, t1, a value and a cost column per optimized
// measure, and the summed cost. One row per candidate.
std::string emit_curves(const Report& report);

}  // namespace lgfo
