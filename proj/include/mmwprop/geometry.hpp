#pragma once

#include <optional>

namespace mmwprop {

/// 3D T-R separation from the horizontal separation and the antenna heights.
/// Throws std::domain_error for negative d2d or non-positive heights.
double derive_d3d(double d2d_m, double h_bs_m, double h_ue_m);

/// Geometry of a single BS-UE link. All models evaluate against this one
/// structure; the breakpoint composites read d2d while the loss formulas
/// read d3d, so both always ride together.
struct LinkGeometry {
  double d2d_m = 0.0;   // horizontal T-R separation
  double d3d_m = 0.0;   // 3D T-R separation, >= d2d_m
  double h_bs_m = 0.0;  // BS antenna height
  double h_ue_m = 0.0;  // UE antenna height

  // Outdoor/indoor split of d2d for O2I links: d2d_out + d2d_in == d2d.
  std::optional<double> d2d_out_m;
  std::optional<double> d2d_in_m;

  static LinkGeometry from_d2d(double d2d_m, double h_bs_m, double h_ue_m);
  static LinkGeometry from_d3d(double d3d_m, double h_bs_m, double h_ue_m);

  /// Returns a copy carrying the outdoor/indoor split.
  LinkGeometry with_indoor_split(double d2d_out_m, double d2d_in_m) const;

  /// Enforces the structural invariants; throws std::domain_error on the
  /// first violated one.
  void validate() const;
};

/// Scenario-typical antenna heights used when the caller supplies only a
/// distance (UMi 10/1.5, UMa 25/1.5, InH 3/1.5, mall 2/2, RMa 35/1.5).
struct DefaultHeights {
  double h_bs_m;
  double h_ue_m;
};

}  // namespace mmwprop
