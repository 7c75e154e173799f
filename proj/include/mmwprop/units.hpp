#pragma once

#include <cmath>
#include <stdexcept>

namespace mmwprop {

// Units are fixed project-wide: frequencies in GHz, distances and heights in
// meters, losses in dB. Conversions happen at the CLI boundary only.

/// Carrier frequency in GHz. Always finite and strictly positive.
class Frequency {
 public:
  explicit Frequency(double ghz) : ghz_(ghz) {
    if (!std::isfinite(ghz) || ghz <= 0.0) {
      throw std::domain_error("carrier frequency must be a positive finite GHz value");
    }
  }

  double ghz() const { return ghz_; }

 private:
  double ghz_;
};

}  // namespace mmwprop
