#pragma once

#include "lgfo/cost_model.hpp"
#include "lgfo/types.hpp"

#include <optional>

namespace lgfo {

struct RunConfig {
  std::vector<Measure> measures{kAllMeasures.begin(), kAllMeasures.end()};
  std::optional<MeasureWeights> weights;  // absent = uniform over measures
  double p2n = 1.0;
  double n2p = 1.0;
  std::optional<long> target_positives;  // absent = ground-truth positives
  double grid_step = 0.02;
  ThresholdPair baseline{0.5, 0.5};
};

// Parses and validates the JSON run configuration. `measures` is an array of
// "sp" | "suff" | "delta_f"; `weights` an optional object keyed the same way;
// `p2n` and `n2p` are required non-negative numbers, not both zero.
RunConfig parse_config(const std::string& json_text);

}  // namespace lgfo
