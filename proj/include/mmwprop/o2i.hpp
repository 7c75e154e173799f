#pragma once

#include <utility>
#include <vector>

#include "mmwprop/units.hpp"

namespace mmwprop {

enum class Material { StandardGlass, IrrGlass, Concrete, Wood };

/// Material penetration loss a + b * fc (dB, fc in GHz).
double material_loss(Material m, Frequency fc);

/// Composite external wall: material proportions summing to 1.
struct WallComposition {
  std::vector<std::pair<Material, double>> parts;

  void validate() const;  // throws std::domain_error
};

/// Through-wall loss of a composite wall:
///   pl_npi - 10 log10( sum_i p_i 10^(-L_i/10) )
/// where pl_npi accounts for non-perpendicular incidence. Throws for an
/// empty or non-normalized composition.
double wall_loss(const WallComposition& wall, Frequency fc, double pl_npi_db);

enum class O2IVariant {
  Tr38901Low,
  Tr38901High,
  FiveGcmLow,
  FiveGcmHigh,
  MmMagic,
  Car,
  CarMetalized,
};

/// Tunable coefficients behind o2i_total. Defaults reproduce the printed
/// variants; pass a modified copy to explore alternatives.
struct O2IModelParams {
  double pl_npi_db = 5.0;
  double indoor_slope_db_per_m = 0.0;  // times d2d_in
  // parabolic building-penetration coefficients: 10 log10(A + B fc^2)
  double bpl_a = 0.0;
  double bpl_b = 0.0;
  // log-linear coefficients: b + c log10(fc)
  double o2i_b = 0.0;
  double o2i_c = 0.0;
  double sigma_db = 0.0;
  double sigma_slope = 0.0;  // times log10(fc), on top of sigma_db
  double car_mu_db = 0.0;
};

O2IModelParams o2i_default_params(O2IVariant v);

struct O2IResult {
  double mean_db;
  double sigma_db;
};

/// Total O2I loss: basic outdoor loss + through-wall (or BPL) term + indoor
/// depth term, with the variant's penetration-loss standard deviation.
/// Negative d2d_in throws std::domain_error.
O2IResult o2i_total(double pl_basic_db, O2IVariant v, Frequency fc, double d2d_in_m);
O2IResult o2i_total(double pl_basic_db, O2IVariant v, Frequency fc, double d2d_in_m,
                    const O2IModelParams& params);

/// Car penetration: mean offset 9 dB (20 dB for metalized windows), sigma 5 dB.
O2IResult car_penetration(double pl_basic_db, bool metalized);

}  // namespace mmwprop
