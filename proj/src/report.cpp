#include "lgfo/report.hpp"

#include "lgfo/csv_io.hpp"

#include "json.hpp"

#include <sstream>

namespace lgfo {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json pair_json(const ThresholdPair& pair) {
  return ordered_json::array({pair.t0, pair.t1});
}

ordered_json measure_map_json(const std::map<Measure, MeasureValue>& values) {
  ordered_json out = ordered_json::object();
  for (const auto& [m, v] : values) out[std::string(measure_name(m))] = v.value;
  return out;
}

ordered_json undefined_map_json(const std::map<Measure, MeasureValue>& values) {
  ordered_json out = ordered_json::object();
  for (const auto& [m, v] : values)
    out[std::string(measure_name(m))] = v.undefined_denominator;
  return out;
}

}  // namespace

Report run(const Dataset& dataset, const RunConfig& config) {
  const std::vector<Measure> measures = canonical_measures(config.measures);
  const MeasureWeights weights =
      config.weights ? *config.weights : MeasureWeights::uniform(measures);
  const CostModel costs(config.p2n, config.n2p);
  const long target =
      config.target_positives.value_or(dataset.positive_label_count());

  LgfoResult result = minimize_lgfo(dataset, measures, weights, costs, target,
                                    config.grid_step, config.baseline);

  Report report{measures,          weights,          costs,
                target,            config.grid_step, config.baseline,
                std::move(result), {}};
  for (Measure m : measures)
    report.measure_values[m] =
        measure_values(dataset, report.result.candidates, m);
  return report;
}

std::string report_to_json(const Report& report) {
  ordered_json j;

  ordered_json config = ordered_json::object();
  config["measures"] = ordered_json::array();
  for (Measure m : report.measures)
    config["measures"].push_back(std::string(measure_name(m)));
  config["weights"] = ordered_json::object();
  for (const auto& [m, w] : report.weights.entries())
    config["weights"][std::string(measure_name(m))] = w;
  config["p2n"] = report.costs.p2n;
  config["n2p"] = report.costs.n2p;
  config["target_positives"] = report.target_positives;
  config["grid_step"] = report.grid_step;
  config["baseline"] = pair_json(report.baseline);
  j["config"] = config;

  const LgfoResult& result = report.result;
  j["baseline"] = {{"t0", result.baseline.t0},
                   {"t1", result.baseline.t1},
                   {"measures", measure_map_json(result.at_baseline)},
                   {"accuracy", result.accuracy_at_baseline},
                   {"undefined_denominator",
                    undefined_map_json(result.at_baseline)}};
  j["optimal"] = {{"index", result.optimal_index},
                  {"t0", result.optimal.t0},
                  {"t1", result.optimal.t1},
                  {"measures", measure_map_json(result.at_optimal)},
                  {"accuracy", result.accuracy_at_optimal},
                  {"undefined_denominator",
                   undefined_map_json(result.at_optimal)}};

  j["candidates"] = ordered_json::array();
  for (std::size_t i = 0; i < result.candidates.size(); ++i) {
    const ThresholdPair& pair = result.candidates.pair(i);
    j["candidates"].push_back(
        {{"index", i}, {"t0", pair.t0}, {"t1", pair.t1}});
  }

  ordered_json curves = ordered_json::object();
  for (const CostCurve& curve : result.per_measure_curves) {
    ordered_json entry;
    entry["optimum_index"] = curve.optimum_index;
    entry["values"] = report.measure_values.at(*curve.measure);
    entry["costs"] = curve.costs;
    curves[std::string(measure_name(*curve.measure))] = entry;
  }
  curves["summed"] = {{"optimum_index", result.summed_curve.optimum_index},
                      {"costs", result.summed_curve.costs}};
  j["curves"] = curves;

  return j.dump(2) + "\n";
}

std::string emit_curves(const Report& report) {
  std::ostringstream out;
  out << "index,t0,t1";
  for (Measure m : report.measures)
    out << ',' << measure_name(m) << "_value," << measure_name(m) << "_cost";
  out << ",summed_cost\n";

  const LgfoResult& result = report.result;
  for (std::size_t i = 0; i < result.candidates.size(); ++i) {
    const ThresholdPair& pair = result.candidates.pair(i);
    out << i << ',' << format_double(pair.t0) << ',' << format_double(pair.t1);
    for (std::size_t c = 0; c < report.measures.size(); ++c) {
      out << ',' << format_double(report.measure_values.at(report.measures[c])[i])
          << ',' << format_double(result.per_measure_curves[c].costs[i]);
    }
    out << ',' << format_double(result.summed_curve.costs[i]) << '\n';
  }
  return out.str();
}

}  // namespace lgfo
