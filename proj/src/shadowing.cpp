#include "mmwprop/shadowing.hpp"

#include <cmath>

#include "mmwprop/path_loss.hpp"
#include "mmwprop/registry.hpp"

namespace mmwprop {

double RandomSource::uniform() {
  // 53-bit mantissa from the top bits of the 64-bit stream
  return (engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::normal() {
  // Box-Muller; written out so the stream does not depend on the standard
  // library's distribution implementations
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double sample_path_loss(const ModelId& model, Frequency fc, const LinkGeometry& geom,
                        const std::optional<EnvironmentConstants>& env,
                        RandomSource& rng) {
  const double mean = mean_path_loss(model, fc, geom, env);
  const double sigma = Registry::instance().path_loss(model).sigma_sf_db;
  if (sigma == 0.0) {
    return mean;
  }
  return mean + sigma * rng.normal();
}

}  // namespace mmwprop
