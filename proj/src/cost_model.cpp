#include "lgfo/cost_model.hpp"

#include <stdexcept>

namespace lgfo {

CostModel::CostModel(double p2n_in, double n2p_in) : p2n(p2n_in), n2p(n2p_in) {
  if (!(p2n >= 0.0)) throw std::invalid_argument("p2n must be non-negative");
  if (!(n2p >= 0.0)) throw std::invalid_argument("n2p must be non-negative");
  if (p2n == 0.0 && n2p == 0.0)
    throw std::invalid_argument("degenerate cost model");
}

MeasureWeights::MeasureWeights(const std::map<Measure, double>& raw) {
  if (raw.empty()) throw std::invalid_argument("weights are empty");
  double sum = 0.0;
  for (const auto& [m, w] : raw) {
    if (!(w >= 0.0))
      throw std::invalid_argument("weight for '" +
                                  std::string(measure_name(m)) +
                                  "' must be non-negative");
    sum += w;
  }
  if (sum <= 0.0) throw std::invalid_argument("weights are all zero");
  for (const auto& [m, w] : raw) weights_[m] = w / sum;
}

MeasureWeights MeasureWeights::uniform(const std::vector<Measure>& measures) {
  std::map<Measure, double> raw;
  for (Measure m : canonical_measures(measures)) raw[m] = 1.0;
  return MeasureWeights(raw);
}

double MeasureWeights::weight(Measure m) const {
  const auto it = weights_.find(m);
  if (it == weights_.end())
    throw std::invalid_argument("no weight for measure '" +
                                std::string(measure_name(m)) + "'");
  return it->second;
}

std::vector<Measure> MeasureWeights::measures() const {
  std::vector<Measure> out;
  out.reserve(weights_.size());
  for (const auto& [m, w] : weights_) out.push_back(m);
  return out;
}

}  // namespace lgfo
