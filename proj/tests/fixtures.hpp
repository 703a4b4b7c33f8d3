#pragma once

#include "lgfo/cost_model.hpp"
#include "lgfo/synthetic.hpp"
#include "lgfo/types.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace lgfo::test {

// Eight-example hand-enumerable fixture. At pair (0.5,0.5):
// group 0 -> tp=1 fp=1 fn=1 tn=1, group 1 -> tp=2 fp=0 fn=0 tn=2,
// SP=0, Suff=0.5, dF=0.5, accuracy=0.75, positives=4.
inline Dataset f1() {
  return Dataset({{"a1", 0.9, 0, 1},
                  {"a2", 0.8, 0, 0},
                  {"a3", 0.3, 0, 1},
                  {"a4", 0.2, 0, 0},
                  {"b1", 0.7, 1, 1},
                  {"b2", 0.6, 1, 1},
                  {"b3", 0.4, 1, 0},
                  {"b4", 0.1, 1, 0}});
}

inline double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

// Random dataset with both groups present; some scores snapped to the 0.25
// grid to exercise the inclusive threshold boundary.
inline Dataset random_dataset(std::mt19937_64& rng, int max_extra = 48) {
  std::vector<ScoredExample> xs;
  const int extra = int(uniform01(rng) * max_extra);
  for (int i = 0; i < extra + 2; ++i) {
    ScoredExample ex;
    ex.id = "x" + std::to_string(i);
    ex.score = uniform01(rng);
    if (uniform01(rng) < 0.3)
      ex.score = double(int(uniform01(rng) * 5)) / 4.0;
    ex.group = i < 2 ? i : (uniform01(rng) < 0.5 ? 0 : 1);
    ex.label = uniform01(rng) < 0.5 ? 0 : 1;
    xs.push_back(std::move(ex));
  }
  return Dataset(std::move(xs));
}

// Power-of-two scale factor: multiplying a cost model by it is exact in
// IEEE arithmetic, so argmin invariance is tested as stated rather than
// through rounding noise at tied candidates.
inline double dyadic_scale(std::mt19937_64& rng) {
  int exponent = int(uniform01(rng) * 13) - 6;
  if (exponent == 0) exponent = 1;
  return std::ldexp(1.0, exponent);
}

inline CostModel random_costs(std::mt19937_64& rng) {
  double p2n = uniform01(rng) * 2.0;
  double n2p = uniform01(rng) * 2.0;
  const double pick = uniform01(rng);
  if (pick < 0.15)
    p2n = 0.0;
  else if (pick < 0.3)
    n2p = 0.0;
  if (p2n == 0.0 && n2p == 0.0) p2n = 1.0;
  return CostModel(p2n, n2p);
}

inline std::vector<Measure> random_measures(std::mt19937_64& rng) {
  std::vector<Measure> out;
  for (Measure m : kAllMeasures)
    if (uniform01(rng) < 0.5) out.push_back(m);
  if (out.empty()) out.push_back(kAllMeasures[int(uniform01(rng) * 3)]);
  return out;
}

inline MeasureWeights random_weights(std::mt19937_64& rng,
                                     const std::vector<Measure>& measures) {
  std::map<Measure, double> raw;
  for (Measure m : measures) raw[m] = 0.05 + uniform01(rng);
  return MeasureWeights(raw);
}

// Frozen two-group fixture standing in for recidivism-score data: unequal
// base rates and group-dependent score distributions at equal thresholds.
inline SynthSpec compas_like_spec() {
  return SynthSpec{{2500, 2500}, {0.51, 0.39}, 0.2, 20260809};
}

// Smaller variant used for the measure-incompatibility scan.
inline SynthSpec incompatibility_spec() {
  return SynthSpec{{1000, 1000}, {0.51, 0.39}, 0.2, 1137};
}

}  // namespace lgfo::test
