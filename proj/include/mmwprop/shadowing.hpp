#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "mmwprop/applicability.hpp"
#include "mmwprop/geometry.hpp"
#include "mmwprop/model_id.hpp"
#include "mmwprop/units.hpp"

namespace mmwprop {

/// Seeded deterministic random source. Identical seeds reproduce identical
/// draw sequences bit-for-bit (mt19937_64 stream plus a fixed Box-Muller
/// transform, independent of the standard library's distributions).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Standard normal draw.
  double normal();

  /// Uniform draw in [0, 1).
  double uniform();

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Mean path loss of the model plus one zero-mean Gaussian shadow-fading
/// draw with the model's registered sigma.
double sample_path_loss(const ModelId& model, Frequency fc, const LinkGeometry& geom,
                        const std::optional<EnvironmentConstants>& env,
                        RandomSource& rng);

}  // namespace mmwprop
