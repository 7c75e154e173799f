#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>

#include "mmwprop/applicability.hpp"
#include "mmwprop/los_probability.hpp"
#include "mmwprop/model_id.hpp"
#include "mmwprop/path_loss.hpp"

namespace mmwprop {

// The registry holds every model row exactly as printed in its source
// table: parameters keep their printed precision, sigma is stored per row,
// and rows that disagree between organizations stay separate entries.

struct CiSpec {
  CiParams p;
};

struct CifSpec {
  CifParams p;
};

struct CihSpec {
  CihParams p;
};

/// Floating-intercept rows, including the variants with a subtractive UE
/// height term and the d2d-based indoor rows.
struct AbgSpec {
  AbgParams p;
  DistanceKind dist = DistanceKind::D3D;
  double ue_slope = 0.0;  // subtracts ue_slope * (h_ue - ue_ref_m)
  double ue_ref_m = 0.0;
};

struct DualSlopeSpec {
  DualSlopeParams p;
};

enum class BreakpointRule { Tr38901, Metis };

/// PL1/PL2 LOS composite: PL1 = intercept + slope10 log10(d3d) + 20 log10(fc),
/// PL2 adds the 40 log10 slope with the printed breakpoint correction.
struct BreakpointLosSpec {
  double intercept_db;
  double slope10;        // 21 (UMi) or 22 (UMa)
  double bp_correction;  // 9.5 (UMi) or 9 (UMa)
  BreakpointRule rule = BreakpointRule::Tr38901;
};

struct MetisUmiLosSpec {};

struct IturRmaLosSpec {};

/// The street-width/building-height NLOS form. Two printed flavors exist:
/// constant 161.04 with a quadratic UE term, and 161.94 with a linear one.
struct NineCoefficientSpec {
  double constant_db;
  bool quadratic_ue_term;
  double ue_slope = 0.6;  // used by the linear flavor
};

using MeanSpec = std::variant<CiSpec, CifSpec, CihSpec, AbgSpec, DualSlopeSpec,
                              BreakpointLosSpec, MetisUmiLosSpec, IturRmaLosSpec,
                              NineCoefficientSpec>;

struct PathLossEntry {
  ModelId id;
  MeanSpec mean;
  double sigma_sf_db;
  ApplicabilityRange range;
  /// NLOS rows printed with the max(LOS, NLOS) patch name their LOS bound.
  std::optional<ModelId> los_bound;
  /// Default environment constants where the formula uses them.
  std::optional<EnvironmentConstants> env_defaults;
  /// Default family of this (org, scenario, visibility) cell.
  bool cell_default = false;
};

struct InHPiecewiseSpec {
  InHPiecewiseParams p;
};

struct RMaExponentialSpec {};

/// d1/d2 rows; the UMa height correction applies where flagged.
struct D1D2Spec {
  D1D2Params p;
  bool height_correction = false;
};

using LosProbSpec = std::variant<D1D2Spec, InHPiecewiseSpec, RMaExponentialSpec>;

struct LosProbEntry {
  ModelId id;
  LosProbSpec spec;
  /// Row says to substitute d2d_out for indoor users.
  bool indoor_distance_rule = false;
  ApplicabilityRange range;
  bool cell_default = false;
};

class Registry {
 public:
  static const Registry& instance();

  /// Exact lookups; throw std::out_of_range with the id in the message.
  const PathLossEntry& path_loss(const ModelId& id) const;
  const LosProbEntry& los_prob(const ModelId& id) const;

  const PathLossEntry* find_path_loss(const ModelId& id) const;
  const LosProbEntry* find_los_prob(const ModelId& id) const;

  /// Either kind; used by applicability checking.
  const ApplicabilityRange* find_range(const ModelId& id) const;

  std::span<const PathLossEntry> all_path_loss() const;
  std::span<const LosProbEntry> all_los_prob() const;

  /// Resolves the family default of a cell when none is given.
  ModelId resolve_path_loss(Org, Scenario, Visibility,
                            std::optional<Family> family = std::nullopt) const;
  ModelId resolve_los_prob(Org, Scenario,
                           std::optional<Family> family = std::nullopt) const;

  /// Parses "org:scenario:vis[:family]" / "org:scenario[:family]" strings.
  ModelId parse_path_loss_id(std::string_view text) const;
  ModelId parse_los_prob_id(std::string_view text) const;

 private:
  Registry();
  std::vector<PathLossEntry> path_loss_;
  std::vector<LosProbEntry> los_prob_;
};

/// Scenario-typical heights for callers that supply only a distance.
DefaultHeights default_heights(Scenario s);

/// Per-scenario shadowing decorrelation distances used by the consistency
/// maps. These are engineering defaults of this library, not standardized
/// values, and every map API accepts an explicit override.
double default_correlation_distance_m(Scenario s);

}  // namespace mmwprop
