#pragma once

#include "lgfo/types.hpp"

#include <cstdint>

namespace lgfo {

// Seeded generator spec for a two-group scored dataset. Labels are Bernoulli
// draws at the group base rate; scores are the label signal shrunk halfway
// toward the group base rate plus Gaussian noise, clamped to [0,1]. The
// shrinkage makes equal-threshold classification group-dependent whenever the
// base rates differ, which is what threshold post-processing corrects.
struct SynthSpec {
  std::array<std::size_t, 2> sizes;      // per-group example counts, >= 1
  std::array<double, 2> base_rates;      // P(Y=1|G=g), in (0,1)
  double noise = 0.2;                    // score noise sigma, >= 0
  std::uint64_t seed = 0;                // fixes the output exactly
};

Dataset generate_synthetic(const SynthSpec& spec);

SynthSpec parse_synth_spec(const std::string& json_text);

}  // namespace lgfo
