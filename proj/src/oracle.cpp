#include "lgfo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lgfo {
namespace {

// Same ratio-difference arithmetic as the measure definitions, restated here
// so the oracle stays independent of the measures module internals.
double policy_abs_diff(long num0, long den0, long num1, long den1) {
  const bool def0 = den0 > 0;
  const bool def1 = den1 > 0;
  if (def0 && def1)
    return std::fabs(double(num0) / double(den0) -
                     double(num1) / double(den1));
  if (!def0 && !def1) return 0.0;
  return 1.0;
}

}  // namespace

OracleResult brute_force_oracle(const Dataset& dataset,
                                const CandidateSet& candidates,
                                const std::vector<Measure>& measures,
                                const MeasureWeights& weights,
                                const CostModel& costs) {
  std::vector<Measure> selected = measures;
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()),
                 selected.end());
  if (selected.empty()) throw std::invalid_argument("measure set is empty");
  if (selected != weights.measures())
    throw std::invalid_argument(
        "weights must cover exactly the optimized measures");

  const std::vector<ScoredExample>& xs = dataset.examples();
  const std::size_t n_cand = candidates.size();

  std::vector<std::vector<int>> pred(n_cand);
  for (std::size_t i = 0; i < n_cand; ++i) {
    pred[i].reserve(xs.size());
    for (const ScoredExample& ex : xs)
      pred[i].push_back(predict(ex, candidates.pair(i)));
  }

  OracleResult out{candidates.pair(0), 0, {}, {}, {}};

  for (Measure m : selected) {
    std::vector<double> values(n_cand);
    for (std::size_t i = 0; i < n_cand; ++i) {
      long pos[2] = {0, 0};
      long tp[2] = {0, 0};
      long fp[2] = {0, 0};
      long n[2] = {0, 0};
      long neg[2] = {0, 0};
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const int g = xs[k].group;
        ++n[g];
        neg[g] += xs[k].label == 0;
        if (pred[i][k] == 1) {
          ++pos[g];
          tp[g] += xs[k].label == 1;
          fp[g] += xs[k].label == 0;
        }
      }
      switch (m) {
        case Measure::StatisticalParity:
          values[i] = policy_abs_diff(pos[0], n[0], pos[1], n[1]);
          break;
        case Measure::Sufficiency:
          values[i] = policy_abs_diff(tp[0], pos[0], tp[1], pos[1]);
          break;
        case Measure::DeltaF:
          values[i] = policy_abs_diff(fp[0], neg[0], fp[1], neg[1]);
          break;
      }
    }

    std::size_t s_min = 0;
    for (std::size_t i = 1; i < n_cand; ++i)
      if (values[i] < values[s_min]) s_min = i;

    CostCurve curve;
    curve.kind = CostCurve::Kind::PerMeasure;
    curve.measure = m;
    curve.optimum_index = s_min;
    curve.costs.reserve(n_cand);
    for (std::size_t i = 0; i < n_cand; ++i) {
      long flips_p2n = 0;
      long flips_n2p = 0;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const int diff = pred[i][k] - pred[s_min][k];
        if (diff == 1)
          ++flips_p2n;
        else if (diff == -1)
          ++flips_n2p;
      }
      curve.costs.push_back(double(flips_p2n) * costs.p2n +
                            double(flips_n2p) * costs.n2p);
    }
    out.per_measure_curves.push_back(std::move(curve));
    out.measure_values[m] = std::move(values);
  }

  CostCurve summed;
  summed.kind = CostCurve::Kind::Summed;
  summed.costs.assign(n_cand, 0.0);
  // Mirrors the equal-weight summation order of lgfo_objective.
  const double w_front = weights.weight(selected.front());
  bool all_equal = true;
  for (Measure m : selected) all_equal = all_equal && weights.weight(m) == w_front;
  if (all_equal) {
    for (std::size_t c = 0; c < selected.size(); ++c)
      for (std::size_t i = 0; i < n_cand; ++i)
        summed.costs[i] += out.per_measure_curves[c].costs[i];
    for (std::size_t i = 0; i < n_cand; ++i) summed.costs[i] *= w_front;
  } else {
    for (std::size_t c = 0; c < selected.size(); ++c) {
      const double w = weights.weight(selected[c]);
      for (std::size_t i = 0; i < n_cand; ++i)
        summed.costs[i] += w * out.per_measure_curves[c].costs[i];
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < n_cand; ++i)
    if (summed.costs[i] < summed.costs[best]) best = i;
  summed.optimum_index = best;

  out.summed_curve = std::move(summed);
  out.optimal_index = best;
  out.optimal = candidates.pair(best);
  return out;
}

}  // namespace lgfo
