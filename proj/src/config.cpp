#include "lgfo/config.hpp"

#include "lgfo/candidates.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lgfo {

RunConfig parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("config must be a JSON object");

  static const std::set<std::string> known = {
      "measures", "weights", "p2n",      "n2p",
      "target_positives", "grid_step", "baseline"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key))
      throw std::runtime_error("unknown config field '" + key + "'");

  RunConfig config;

  if (j.contains("measures")) {
    if (!j["measures"].is_array() || j["measures"].empty())
      throw std::runtime_error("measures must be a non-empty array");
    std::vector<Measure> measures;
    for (const auto& item : j["measures"]) {
      if (!item.is_string())
        throw std::runtime_error("measures entries must be strings");
      const std::string name = item.get<std::string>();
      const auto m = measure_from_name(name);
      if (!m)
        throw std::runtime_error("unknown measure name '" + name +
                                 "' in measures");
      if (std::find(measures.begin(), measures.end(), *m) != measures.end())
        throw std::runtime_error("duplicate measure '" + name +
                                 "' in measures");
      measures.push_back(*m);
    }
    config.measures = canonical_measures(measures);
  }

  if (j.contains("weights")) {
    if (!j["weights"].is_object())
      throw std::runtime_error("weights must be an object");
    std::map<Measure, double> raw;
    bool any_positive = false;
    for (const auto& [name, value] : j["weights"].items()) {
      const auto m = measure_from_name(name);
      if (!m)
        throw std::runtime_error("unknown measure name '" + name +
                                 "' in weights");
      if (!value.is_number() || value.get<double>() < 0.0)
        throw std::runtime_error("weights: value for '" + name +
                                 "' must be a non-negative number");
      raw[*m] = value.get<double>();
      any_positive = any_positive || value.get<double>() > 0.0;
    }
    std::vector<Measure> covered;
    for (const auto& [m, w] : raw) covered.push_back(m);
    if (covered != config.measures)
      throw std::runtime_error(
          "weights must cover exactly the configured measures");
    if (!any_positive) throw std::runtime_error("weights are all zero");
    config.weights = MeasureWeights(raw);
  }

  for (const char* field : {"p2n", "n2p"}) {
    if (!j.contains(field))
      throw std::runtime_error(std::string("missing config field '") + field +
                               "'");
    if (!j[field].is_number())
      throw std::runtime_error(std::string(field) + " must be a number");
    const double value = j[field].get<double>();
    if (value < 0.0)
      throw std::runtime_error(std::string(field) + " must be non-negative");
    (field[0] == 'p' ? config.p2n : config.n2p) = value;
  }
  CostModel(config.p2n, config.n2p);  // rejects the degenerate all-zero model

  if (j.contains("target_positives")) {
    if (!j["target_positives"].is_number_integer() ||
        j["target_positives"].get<long long>() < 0)
      throw std::runtime_error(
          "target_positives must be a non-negative integer");
    config.target_positives = j["target_positives"].get<long>();
  }

  if (j.contains("grid_step")) {
    if (!j["grid_step"].is_number())
      throw std::runtime_error("grid_step must be a number");
    config.grid_step = j["grid_step"].get<double>();
    grid_steps_from_step(config.grid_step);
  }

  if (j.contains("baseline")) {
    if (!j["baseline"].is_array() || j["baseline"].size() != 2 ||
        !j["baseline"][0].is_number() || !j["baseline"][1].is_number())
      throw std::runtime_error("baseline must be a two-number array");
    try {
      config.baseline = ThresholdPair(j["baseline"][0].get<double>(),
                                      j["baseline"][1].get<double>());
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("baseline thresholds must be in [0,1]");
    }
  }

  return config;
}

}  // namespace lgfo
