#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "mmwprop/model_id.hpp"

namespace mmwprop {

/// Geometry and correlation structure of a consistency map.
struct GridSpec {
  double origin_x_m = 0.0;  // lower-left corner of the covered area
  double origin_y_m = 0.0;
  double cell_m = 2.0;      // cell edge length; must be <= corr_dist_m / 2
  int nx = 0;
  int ny = 0;
  double corr_dist_m = 0.0;  // decorrelation distance of both fields

  void validate() const;  // throws std::domain_error
};

/// Spatially consistent LOS-state and shadowing map. Both fields start as
/// i.i.d. normal draws on the grid and are spatially filtered to an
/// exponential autocorrelation exp(-lag/corr_dist); the LOS state then
/// thresholds the Gaussian copula of the filtered field against the local
/// LOS probability, which preserves the marginal P_LOS(d) exactly.
/// Immutable once generated; a pure function of (spec, bs position, seed).
class SpatialGrid {
 public:
  const GridSpec& spec() const { return spec_; }
  std::uint64_t seed() const { return seed_; }
  double bs_x_m() const { return bs_x_m_; }
  double bs_y_m() const { return bs_y_m_; }

  int cell_index_x(double x_m) const;
  int cell_index_y(double y_m) const;
  bool in_extent(double x_m, double y_m) const;

  bool los_cell(int ix, int iy) const;
  double shadow_cell_db(int ix, int iy) const;

  /// LOS state of the containing cell. Out of extent throws std::domain_error.
  bool los_at(double x_m, double y_m) const;

  /// Shadowing bilinearly interpolated between cell centers (clamped in the
  /// outer half-cell border). Out of extent throws std::domain_error.
  double shadow_at(double x_m, double y_m) const;

  /// Rows "x_m,y_m,los,shadow_db" with a header, one line per cell, row-major
  /// from the origin. Doubles are shortest round-trip formatted.
  void write_csv(std::ostream& out) const;

  friend SpatialGrid generate_consistency_map(
      const std::function<double(double)>& p_los_of_d2d, double shadow_sigma_db,
      const GridSpec& spec, double bs_x_m, double bs_y_m, std::uint64_t seed);

 private:
  SpatialGrid() = default;
  GridSpec spec_;
  std::uint64_t seed_ = 0;
  double bs_x_m_ = 0.0, bs_y_m_ = 0.0;
  std::vector<std::uint8_t> los_;
  std::vector<double> shadow_db_;
};

/// Low-level generator over an arbitrary LOS probability curve.
SpatialGrid generate_consistency_map(const std::function<double(double)>& p_los_of_d2d,
                                     double shadow_sigma_db, const GridSpec& spec,
                                     double bs_x_m, double bs_y_m, std::uint64_t seed);

/// Registry-driven generator: the LOS probability model registered under
/// losprob_model evaluated at the given UE height drives the LOS state.
SpatialGrid generate_consistency_map(const ModelId& losprob_model, double h_ue_m,
                                     double shadow_sigma_db, const GridSpec& spec,
                                     double bs_x_m, double bs_y_m, std::uint64_t seed);

}  // namespace mmwprop
