#include "lgfo/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace lgfo {
namespace {

// |num0/den0 - num1/den1| with the zero-denominator policy: exactly one
// undefined side is maximal unfairness, both undefined compare as equal.
MeasureValue ratio_abs_diff(long num0, long den0, long num1, long den1) {
  const bool def0 = den0 > 0;
  const bool def1 = den1 > 0;
  if (def0 && def1)
    return {std::fabs(double(num0) / double(den0) -
                      double(num1) / double(den1)),
            false};
  if (!def0 && !def1) return {0.0, true};
  return {1.0, true};
}

}  // namespace

int predict(const ScoredExample& example, const ThresholdPair& pair) {
  const double threshold = example.group == 0 ? pair.t0 : pair.t1;
  return example.score >= threshold ? 1 : 0;
}

GroupConfusion confusion(const Dataset& dataset, const ThresholdPair& pair) {
  GroupConfusion counts;
  for (const ScoredExample& ex : dataset.examples()) {
    ConfusionCounts& c = counts.group[ex.group];
    if (predict(ex, pair) == 1)
      ++(ex.label == 1 ? c.tp : c.fp);
    else
      ++(ex.label == 1 ? c.fn : c.tn);
  }
  return counts;
}

MeasureValue statistical_parity_value(const GroupConfusion& counts) {
  return ratio_abs_diff(
      counts.group[0].predicted_positive(), counts.group[0].size(),
      counts.group[1].predicted_positive(), counts.group[1].size());
}

MeasureValue sufficiency_value(const GroupConfusion& counts) {
  return ratio_abs_diff(counts.group[0].tp,
                        counts.group[0].predicted_positive(),
                        counts.group[1].tp,
                        counts.group[1].predicted_positive());
}

MeasureValue delta_f_value(const GroupConfusion& counts) {
  return ratio_abs_diff(counts.group[0].fp, counts.group[0].label_negative(),
                        counts.group[1].fp, counts.group[1].label_negative());
}

MeasureValue measure_value(Measure m, const GroupConfusion& counts) {
  switch (m) {
    case Measure::StatisticalParity:
      return statistical_parity_value(counts);
    case Measure::Sufficiency:
      return sufficiency_value(counts);
    case Measure::DeltaF:
      return delta_f_value(counts);
  }
  throw std::logic_error("invalid measure enum value");
}

double statistical_parity(const Dataset& dataset, const ThresholdPair& pair) {
  return statistical_parity_value(confusion(dataset, pair)).value;
}

double sufficiency(const Dataset& dataset, const ThresholdPair& pair) {
  return sufficiency_value(confusion(dataset, pair)).value;
}

double delta_f(const Dataset& dataset, const ThresholdPair& pair) {
  return delta_f_value(confusion(dataset, pair)).value;
}

double accuracy(const Dataset& dataset, const ThresholdPair& pair) {
  const GroupConfusion counts = confusion(dataset, pair);
  const long correct = counts.group[0].correct() + counts.group[1].correct();
  return double(correct) / double(dataset.size());
}

long positives_count(const Dataset& dataset, const ThresholdPair& pair) {
  long total = 0;
  for (const ScoredExample& ex : dataset.examples()) total += predict(ex, pair);
  return total;
}

}  // namespace lgfo
