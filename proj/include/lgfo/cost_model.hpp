#pragma once

#include "lgfo/types.hpp"

#include <map>

namespace lgfo {

// Expected damages of flipping an outcome: positive-to-negative (p2n) and
// negative-to-positive (n2p). Both non-negative, not both zero.
struct CostModel {
  double p2n;
  double n2p;
  CostModel(double p2n_in, double n2p_in);
};

// Court-preference probabilities per measure. Normalized to sum to 1 at
// construction; at least one weight must be strictly positive.
class MeasureWeights {
 public:
  explicit MeasureWeights(const std::map<Measure, double>& raw);
  static MeasureWeights uniform(const std::vector<Measure>& measures);

  double weight(Measure m) const;
  const std::map<Measure, double>& entries() const { return weights_; }
  std::vector<Measure> measures() const;

 private:
  std::map<Measure, double> weights_;
};

}  // namespace lgfo
