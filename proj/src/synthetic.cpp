#include "lgfo/synthetic.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

namespace lgfo {
namespace {

// Weight of the group base rate in the score anchor; the remainder is the
// label signal.
constexpr double kAnchorWeight = 0.5;

// 53-bit uniform in [0,1). mt19937_64 output is fully specified by the
// standard, so the stream is identical everywhere for a given seed.
double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller, cosine branch only; avoids the implementation-defined state of
// std::normal_distribution.
double standard_normal(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  if (u1 < 1e-300) u1 = 1e-300;
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

void validate(const SynthSpec& spec) {
  for (int g : {0, 1}) {
    if (spec.sizes[g] < 1)
      throw std::invalid_argument("sizes: group " + std::to_string(g) +
                                  " must have at least 1 example");
    if (!(spec.base_rates[g] > 0.0 && spec.base_rates[g] < 1.0))
      throw std::invalid_argument("base_rates: group " + std::to_string(g) +
                                  " rate must be in (0,1)");
  }
  if (!(spec.noise >= 0.0) || !std::isfinite(spec.noise))
    throw std::invalid_argument("noise must be a non-negative number");
}

}  // namespace

Dataset generate_synthetic(const SynthSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  std::vector<ScoredExample> examples;
  examples.reserve(spec.sizes[0] + spec.sizes[1]);
  for (int g : {0, 1}) {
    for (std::size_t i = 0; i < spec.sizes[g]; ++i) {
      const int label = uniform01(rng) < spec.base_rates[g] ? 1 : 0;
      const double raw = kAnchorWeight * spec.base_rates[g] +
                         (1.0 - kAnchorWeight) * label +
                         spec.noise * standard_normal(rng);
      char id[32];
      std::snprintf(id, sizeof(id), "g%d-%06zu", g, i);
      examples.push_back(
          {id, std::clamp(raw, 0.0, 1.0), g, label});
    }
  }
  return Dataset(std::move(examples));
}

SynthSpec parse_synth_spec(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("synth spec parse error: ") +
                             e.what());
  }
  if (!j.is_object())
    throw std::runtime_error("synth spec must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "sizes" && key != "base_rates" && key != "noise" &&
        key != "seed")
      throw std::runtime_error("unknown synth spec field '" + key + "'");

  SynthSpec spec{{0, 0}, {0.5, 0.5}, 0.2, 0};
  for (const char* field : {"sizes", "base_rates"}) {
    if (!j.contains(field))
      throw std::runtime_error(std::string("missing synth spec field '") +
                               field + "'");
    if (!j[field].is_array() || j[field].size() != 2)
      throw std::runtime_error(std::string(field) +
                               " must be a two-element array");
  }
  for (int g : {0, 1}) {
    if (!j["sizes"][g].is_number_integer() ||
        j["sizes"][g].get<long long>() < 1)
      throw std::runtime_error("sizes must be positive integers");
    spec.sizes[g] = j["sizes"][g].get<std::size_t>();
    if (!j["base_rates"][g].is_number())
      throw std::runtime_error("base_rates must be numbers");
    spec.base_rates[g] = j["base_rates"][g].get<double>();
  }
  if (j.contains("noise")) {
    if (!j["noise"].is_number())
      throw std::runtime_error("noise must be a number");
    spec.noise = j["noise"].get<double>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer())
      throw std::runtime_error("seed must be an integer");
    spec.seed = j["seed"].get<std::uint64_t>();
  }
  return spec;
}

}  // namespace lgfo
