#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lgfo {

// Group-difference unfairness measures, in canonical order. Each is an
// absolute between-group difference in [0,1]; 0 means the property holds.
enum class Measure { StatisticalParity, Sufficiency, DeltaF };

inline constexpr std::array<Measure, 3> kAllMeasures = {
    Measure::StatisticalParity, Measure::Sufficiency, Measure::DeltaF};

std::string_view measure_name(Measure m);  // "sp", "suff", "delta_f"
std::optional<Measure> measure_from_name(std::string_view name);

// Sorts into canonical order and removes duplicates; rejects an empty list.
std::vector<Measure> canonical_measures(const std::vector<Measure>& measures);

// One classifier output: raw positive-class score, protected-group flag and
// ground-truth label (1 = positive class).
struct ScoredExample {
  std::string id;
  double score = 0.0;
  int group = 0;
  int label = 0;
};

// Per-group decision thresholds. Construction validates the [0,1] range.
struct ThresholdPair {
  double t0;
  double t1;
  ThresholdPair(double t0_in, double t1_in);
};

bool operator==(const ThresholdPair& a, const ThresholdPair& b);

// Immutable example collection. Requires at least one example of each group
// so that per-group prediction rates always have positive denominators.
class Dataset {
 public:
  explicit Dataset(std::vector<ScoredExample> examples);

  const std::vector<ScoredExample>& examples() const { return examples_; }
  std::size_t size() const { return examples_.size(); }
  long group_size(int group) const { return group_sizes_[group]; }
  long positive_label_count() const { return positive_labels_; }

 private:
  std::vector<ScoredExample> examples_;
  std::array<long, 2> group_sizes_{0, 0};
  long positive_labels_ = 0;
};

}  // namespace lgfo
