#include "lgfo/optimizer.hpp"

#include "grid_counts.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgfo {
namespace {

std::vector<double> values_from_counts(const detail::GridCounts& gc,
                                       const CandidateSet& candidates,
                                       Measure m) {
  std::vector<double> values;
  values.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    values.push_back(
        measure_value(m, detail::confusion_at(gc, candidates.index_t0(i),
                                              candidates.index_t1(i)))
            .value);
  return values;
}

}  // namespace

std::size_t first_argmin(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("empty value sequence");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[best]) best = i;
  return best;
}

double misclassification_cost(int yhat_i, int yhat_j, const CostModel& costs) {
  if ((yhat_i != 0 && yhat_i != 1) || (yhat_j != 0 && yhat_j != 1))
    throw std::invalid_argument("predictions must be 0 or 1");
  const int diff = yhat_i - yhat_j;
  if (diff == 1) return costs.p2n;
  if (diff == -1) return costs.n2p;
  return 0.0;
}

std::vector<double> measure_values(const Dataset& dataset,
                                   const CandidateSet& candidates, Measure m) {
  const detail::GridCounts gc =
      detail::build_grid_counts(dataset, candidates.steps());
  return values_from_counts(gc, candidates, m);
}

CostCurve per_measure_cost(const Dataset& dataset,
                           const CandidateSet& candidates, Measure m,
                           const CostModel& costs) {
  if (candidates.size() == 0)
    throw std::invalid_argument("candidate set is empty");
  const detail::GridCounts gc =
      detail::build_grid_counts(dataset, candidates.steps());
  const std::vector<double> values = values_from_counts(gc, candidates, m);
  const std::size_t s_min = first_argmin(values);

  CostCurve curve;
  curve.kind = CostCurve::Kind::PerMeasure;
  curve.measure = m;
  curve.optimum_index = s_min;
  curve.costs.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    // Predictions are monotone in the threshold, so within a group the flips
    // between two pairs all go one way and the count is a plain difference.
    long flips_p2n = 0;
    long flips_n2p = 0;
    for (int g : {0, 1}) {
      const int idx_i = g == 0 ? candidates.index_t0(i) : candidates.index_t1(i);
      const int idx_m = g == 0 ? candidates.index_t0(s_min)
                               : candidates.index_t1(s_min);
      const long diff = gc.pos[g][idx_i] - gc.pos[g][idx_m];
      if (diff > 0)
        flips_p2n += diff;
      else
        flips_n2p += -diff;
    }
    curve.costs.push_back(double(flips_p2n) * costs.p2n +
                          double(flips_n2p) * costs.n2p);
  }
  return curve;
}

CostCurve lgfo_objective(const std::vector<CostCurve>& per_measure_curves,
                         const MeasureWeights& weights) {
  if (per_measure_curves.empty())
    throw std::invalid_argument("no cost curves given");
  std::map<Measure, const CostCurve*> by_measure;
  const std::size_t length = per_measure_curves.front().costs.size();
  for (const CostCurve& curve : per_measure_curves) {
    if (curve.kind != CostCurve::Kind::PerMeasure || !curve.measure)
      throw std::invalid_argument("objective inputs must be per-measure curves");
    if (curve.costs.size() != length)
      throw std::invalid_argument("cost curves have mismatched lengths");
    if (!by_measure.emplace(*curve.measure, &curve).second)
      throw std::invalid_argument("duplicate curve for measure '" +
                                  std::string(measure_name(*curve.measure)) +
                                  "'");
  }
  for (const auto& [m, w] : weights.entries())
    if (!by_measure.count(m))
      throw std::invalid_argument("missing curve for weighted measure '" +
                                  std::string(measure_name(m)) + "'");
  if (by_measure.size() != weights.entries().size())
    throw std::invalid_argument("weights must cover exactly the curve measures");

  CostCurve summed;
  summed.kind = CostCurve::Kind::Summed;
  summed.costs.assign(length, 0.0);
  // With equal weights, accumulate the plain sum first and scale once at the
  // end. Candidates whose total flip counts agree then get bit-identical
  // summed costs, so ties resolve the same way as in the unweighted sum.
  const double w_front = weights.entries().begin()->second;
  bool all_equal = true;
  for (const auto& [m, w] : weights.entries())
    all_equal = all_equal && w == w_front;
  if (all_equal) {
    for (const auto& [m, w] : weights.entries()) {
      const std::vector<double>& costs = by_measure.at(m)->costs;
      for (std::size_t i = 0; i < length; ++i) summed.costs[i] += costs[i];
    }
    for (std::size_t i = 0; i < length; ++i) summed.costs[i] *= w_front;
  } else {
    for (const auto& [m, w] : weights.entries()) {
      const std::vector<double>& costs = by_measure.at(m)->costs;
      for (std::size_t i = 0; i < length; ++i) summed.costs[i] += w * costs[i];
    }
  }
  summed.optimum_index = first_argmin(summed.costs);
  return summed;
}

LgfoResult minimize_lgfo(const Dataset& dataset,
                         const std::vector<Measure>& measures,
                         const MeasureWeights& weights, const CostModel& costs,
                         long target_positives, double grid_step,
                         const ThresholdPair& baseline) {
  const std::vector<Measure> selected = canonical_measures(measures);
  if (selected != weights.measures())
    throw std::invalid_argument(
        "weights must cover exactly the optimized measures");

  CandidateSet candidates = get_thresholds(dataset, target_positives, grid_step);
  std::vector<CostCurve> curves;
  curves.reserve(selected.size());
  for (Measure m : selected)
    curves.push_back(per_measure_cost(dataset, candidates, m, costs));
  CostCurve summed = lgfo_objective(curves, weights);
  const std::size_t optimal_index = summed.optimum_index;
  const ThresholdPair optimal = candidates.pair(optimal_index);

  LgfoResult result{optimal,
                    optimal_index,
                    std::move(candidates),
                    std::move(curves),
                    std::move(summed),
                    baseline,
                    {},
                    {},
                    0.0,
                    0.0};
  const GroupConfusion at_opt = confusion(dataset, optimal);
  const GroupConfusion at_base = confusion(dataset, baseline);
  for (Measure m : kAllMeasures) {
    result.at_optimal[m] = measure_value(m, at_opt);
    result.at_baseline[m] = measure_value(m, at_base);
  }
  result.accuracy_at_optimal = accuracy(dataset, optimal);
  result.accuracy_at_baseline = accuracy(dataset, baseline);
  return result;
}

std::vector<SensitivityPoint> cost_sensitivity(const Dataset& dataset,
                                               const CandidateSet& candidates,
                                               Measure m,
                                               const CostModel& costs) {
  const std::vector<double> values = measure_values(dataset, candidates, m);
  const CostCurve curve = per_measure_cost(dataset, candidates, m, costs);
  std::vector<SensitivityPoint> points;
  points.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    points.push_back({values[i], curve.costs[i]});
  std::stable_sort(points.begin(), points.end(),
                   [](const SensitivityPoint& a, const SensitivityPoint& b) {
                     return a.measure_value < b.measure_value;
                   });
  return points;
}

}  // namespace lgfo
