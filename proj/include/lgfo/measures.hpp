#pragma once

#include "lgfo/types.hpp"

namespace lgfo {

struct ConfusionCounts {
  long tp = 0;
  long fp = 0;
  long tn = 0;
  long fn = 0;

  long size() const { return tp + fp + tn + fn; }
  long predicted_positive() const { return tp + fp; }
  long label_negative() const { return fp + tn; }
  long correct() const { return tp + tn; }
};

struct GroupConfusion {
  std::array<ConfusionCounts, 2> group;
};

// A measure evaluation. undefined_denominator is set when a group had no
// positive predictions (Suff) or no negative labels (delta_f); with exactly
// one group undefined the value is 1.0, with both undefined it is 0.0.
struct MeasureValue {
  double value = 0.0;
  bool undefined_denominator = false;
};

// 1 iff the example's score is >= its group's threshold (inclusive).
int predict(const ScoredExample& example, const ThresholdPair& pair);

GroupConfusion confusion(const Dataset& dataset, const ThresholdPair& pair);

MeasureValue statistical_parity_value(const GroupConfusion& counts);
MeasureValue sufficiency_value(const GroupConfusion& counts);
MeasureValue delta_f_value(const GroupConfusion& counts);
MeasureValue measure_value(Measure m, const GroupConfusion& counts);

// |P(Yhat=1|G=0) - P(Yhat=1|G=1)|
double statistical_parity(const Dataset& dataset, const ThresholdPair& pair);
// |Prec_0 - Prec_1| where Prec = P(Y=1|Yhat=1)
double sufficiency(const Dataset& dataset, const ThresholdPair& pair);
// |FPR_0 - FPR_1| where FPR = P(Yhat=1|Y=0)
double delta_f(const Dataset& dataset, const ThresholdPair& pair);

double accuracy(const Dataset& dataset, const ThresholdPair& pair);
long positives_count(const Dataset& dataset, const ThresholdPair& pair);

}  // namespace lgfo
