#include "lgfo/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgfo {

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::StatisticalParity:
      return "sp";
    case Measure::Sufficiency:
      return "suff";
    case Measure::DeltaF:
      return "delta_f";
  }
  throw std::logic_error("invalid measure enum value");
}

std::optional<Measure> measure_from_name(std::string_view name) {
  for (Measure m : kAllMeasures)
    if (measure_name(m) == name) return m;
  return std::nullopt;
}

std::vector<Measure> canonical_measures(const std::vector<Measure>& measures) {
  std::vector<Measure> out = measures;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw std::invalid_argument("measure set is empty");
  return out;
}

ThresholdPair::ThresholdPair(double t0_in, double t1_in) : t0(t0_in), t1(t1_in) {
  if (!(t0 >= 0.0 && t0 <= 1.0))
    throw std::invalid_argument("t0 out of range [0,1]");
  if (!(t1 >= 0.0 && t1 <= 1.0))
    throw std::invalid_argument("t1 out of range [0,1]");
}

bool operator==(const ThresholdPair& a, const ThresholdPair& b) {
  return a.t0 == b.t0 && a.t1 == b.t1;
}

Dataset::Dataset(std::vector<ScoredExample> examples)
    : examples_(std::move(examples)) {
  if (examples_.empty()) throw std::invalid_argument("dataset is empty");
  for (const ScoredExample& ex : examples_) {
    if (!(ex.score >= 0.0 && ex.score <= 1.0))
      throw std::invalid_argument("score out of range for example '" + ex.id +
                                  "'");
    if (ex.group != 0 && ex.group != 1)
      throw std::invalid_argument("group must be 0 or 1 for example '" +
                                  ex.id + "'");
    if (ex.label != 0 && ex.label != 1)
      throw std::invalid_argument("label must be 0 or 1 for example '" +
                                  ex.id + "'");
    ++group_sizes_[ex.group];
    positive_labels_ += ex.label;
  }
  for (int g : {0, 1})
    if (group_sizes_[g] == 0)
      throw std::invalid_argument("group " + std::to_string(g) + " absent");
}

}  // namespace lgfo
