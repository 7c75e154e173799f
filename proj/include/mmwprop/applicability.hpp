#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mmwprop/geometry.hpp"
#include "mmwprop/model_id.hpp"
#include "mmwprop/units.hpp"

namespace mmwprop {

/// Closed interval on one applicability axis.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  static Interval any() { return {}; }
  static Interval at_least(double lo) { return {lo, std::numeric_limits<double>::infinity()}; }
  static Interval between(double lo, double hi) { return {lo, hi}; }
  static Interval exactly(double v) { return {v, v}; }

  bool contains(double v) const { return v >= lo && v <= hi; }
  bool bounded() const;
};

/// Which separation distance an applicability interval (or a log-distance
/// formula) refers to.
enum class DistanceKind { D2D, D3D };

/// Environment constants entering the rural/street NLOS forms.
struct EnvironmentConstants {
  double street_width_m = 20.0;
  double building_height_m = 5.0;
};

/// Validated ranges of one registered model, as printed in its source table.
struct ApplicabilityRange {
  Interval fc_ghz = Interval::any();
  Interval d_m = Interval::any();
  DistanceKind d_kind = DistanceKind::D2D;
  Interval h_bs_m = Interval::any();
  Interval h_ue_m = Interval::any();
  std::optional<Interval> street_width_m;
  std::optional<Interval> building_height_m;
};

/// One violated applicability constraint.
struct Violation {
  std::string axis;  // "fc", "d2d", "d3d", "hbs", "hue", "w", "h"
  double value = 0.0;
  Interval allowed;
  std::string message;
};

/// Checks (fc, geometry, environment) against the registered ranges of the
/// model. An empty result means the evaluation is inside the validated
/// envelope; violations are advisory unless the caller runs in strict mode.
/// Throws std::out_of_range for an unregistered model.
std::vector<Violation> check_applicability(
    const ModelId& model, Frequency fc, const LinkGeometry& geom,
    const std::optional<EnvironmentConstants>& env = std::nullopt);

}  // namespace mmwprop
