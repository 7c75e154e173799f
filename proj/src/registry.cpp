#include "mmwprop/registry.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mmwprop {

bool Interval::bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Strict "> 1 m" height domain of the effective-height breakpoint formulas,
// represented as a closed bound a hair above 1.
const Interval kAboveOneMeter{1.0 + 1e-6, kInf};

ApplicabilityRange ci_range(double fc_lo, double fc_hi) {
  ApplicabilityRange r;
  r.fc_ghz = Interval::between(fc_lo, fc_hi);
  r.d_m = Interval::at_least(1.0);
  r.d_kind = DistanceKind::D3D;
  return r;
}

ModelId id(Org o, Scenario s, Visibility v, Family f) { return {o, s, v, f}; }

std::string format_quantity(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

Registry::Registry() {
  using enum Org;
  using enum Scenario;
  using enum Visibility;
  using enum Family;
  const auto D2D = DistanceKind::D2D;

  // ---------------------------------------------------------------- 5GCM
  {
    PathLossEntry e;
    e.id = id(FiveGCM, UMiStreetCanyon, Los, CI);
    e.mean = CiSpec{{2.1}};
    e.sigma_sf_db = 3.76;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, UMiStreetCanyon, Nlos, CI);
    e.mean = CiSpec{{3.17}};
    e.sigma_sf_db = 8.09;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, UMiStreetCanyon, Nlos, ABG);
    e.mean = AbgSpec{{3.53, 22.4, 2.13}};
    e.sigma_sf_db = 7.82;
    e.range = ci_range(6.0, 100.0);
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, UMiOpenSquare, Los, CI);
    e.mean = CiSpec{{1.85}};
    e.sigma_sf_db = 4.2;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, UMiOpenSquare, Nlos, CI);
    e.mean = CiSpec{{2.89}};
    e.sigma_sf_db = 7.1;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, UMiOpenSquare, Nlos, ABG);
    e.mean = AbgSpec{{4.14, 3.66, 2.43}};
    e.sigma_sf_db = 7.0;
    e.range = ci_range(6.0, 100.0);
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, UMa, Los, CI);
    e.mean = CiSpec{{2.0}};
    e.sigma_sf_db = 4.1;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, UMa, Nlos, CI);
    e.mean = CiSpec{{3.0}};
    e.sigma_sf_db = 6.8;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, UMa, Nlos, ABG);
    e.mean = AbgSpec{{3.4, 19.2, 2.3}};
    e.sigma_sf_db = 6.5;
    e.range = ci_range(6.0, 100.0);
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, InHMixedOffice, Los, CI);
    e.mean = CiSpec{{1.73}};
    e.sigma_sf_db = 3.02;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, InHMixedOffice, Nlos, CIF);
    e.mean = CifSpec{{3.19, 0.06, 24.2}};
    e.sigma_sf_db = 8.29;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, InHMixedOffice, Nlos, ABG);
    e.mean = AbgSpec{{3.83, 17.30, 2.49}};
    e.sigma_sf_db = 8.03;
    e.range = ci_range(6.0, 100.0);
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, InHMixedOffice, Nlos, DualCIF);
    e.mean = DualSlopeSpec{DualCifParams{2.51, 0.06, 24.1, 4.25, 0.04, 7.8}};
    e.sigma_sf_db = 7.65;
    e.range = ci_range(6.0, 100.0);
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, InHMixedOffice, Nlos, DualABG);
    e.mean = DualSlopeSpec{DualAbgParams{1.7, 33.0, 2.49, 4.17, 6.9}};
    e.sigma_sf_db = 7.78;
    e.range = ci_range(6.0, 100.0);
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, InHShoppingMall, Los, CI);
    e.mean = CiSpec{{1.73}};
    e.sigma_sf_db = 2.01;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, InHShoppingMall, Nlos, CIF);
    e.mean = CifSpec{{2.59, 0.01, 39.5}};
    e.sigma_sf_db = 7.40;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, InHShoppingMall, Nlos, ABG);
    e.mean = AbgSpec{{3.21, 18.09, 2.24}};
    e.sigma_sf_db = 6.97;
    e.range = ci_range(6.0, 100.0);
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, InHShoppingMall, Nlos, DualCIF);
    e.mean = DualSlopeSpec{DualCifParams{2.43, -0.01, 39.5, 8.36, 0.39, 110.0}};
    e.sigma_sf_db = 6.26;
    e.range = ci_range(6.0, 100.0);
    path_loss_.push_back(e);

    e = {};
    e.id = id(FiveGCM, InHShoppingMall, Nlos, DualABG);
    e.mean = DualSlopeSpec{DualAbgParams{2.9, 22.17, 2.24, 11.47, 147.0}};
    e.sigma_sf_db = 6.36;
    e.range = ci_range(6.0, 100.0);
    path_loss_.push_back(e);
  }

  // ------------------------------------------------------ 3GPP TR 38.901
  {
    PathLossEntry e;
    e.id = id(TR38901, UMiStreetCanyon, Los, Breakpoint);
    e.mean = BreakpointLosSpec{32.4, 21.0, 9.5, BreakpointRule::Tr38901};
    e.sigma_sf_db = 4.0;
    e.range.fc_ghz = Interval::between(0.5, 100.0);
    e.range.d_m = Interval::between(10.0, 5000.0);
    e.range.h_ue_m = Interval::between(1.5, 22.5);
    e.range.h_bs_m = Interval::exactly(10.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(TR38901, UMiStreetCanyon, Nlos, ABG);
    e.mean = AbgSpec{{3.53, 22.4, 2.13}, DistanceKind::D3D, 0.3, 1.5};
    e.sigma_sf_db = 7.82;
    e.range.fc_ghz = Interval::between(0.5, 100.0);
    e.range.d_m = Interval::between(10.0, 5000.0);
    e.range.h_ue_m = Interval::between(1.5, 22.5);
    e.range.h_bs_m = Interval::exactly(10.0);
    e.los_bound = id(TR38901, UMiStreetCanyon, Los, Breakpoint);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(TR38901, UMiStreetCanyon, Nlos, CI);
    e.mean = CiSpec{{3.19}};
    e.sigma_sf_db = 8.2;
    e.range.fc_ghz = Interval::between(0.5, 100.0);
    e.range.d_m = Interval::between(10.0, 5000.0);
    e.range.h_ue_m = Interval::between(1.5, 22.5);
    e.range.h_bs_m = Interval::exactly(10.0);
    path_loss_.push_back(e);

    e = {};
    e.id = id(TR38901, UMa, Los, Breakpoint);
    e.mean = BreakpointLosSpec{28.0, 22.0, 9.0, BreakpointRule::Tr38901};
    e.sigma_sf_db = 4.0;
    e.range.fc_ghz = Interval::between(0.5, 100.0);
    e.range.d_m = Interval::between(10.0, 5000.0);
    e.range.h_ue_m = Interval::between(1.5, 22.5);
    e.range.h_bs_m = Interval::exactly(25.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(TR38901, UMa, Nlos, ABG);
    e.mean = AbgSpec{{3.908, 13.54, 2.0}, DistanceKind::D3D, 0.6, 1.5};
    e.sigma_sf_db = 6.0;
    e.range.fc_ghz = Interval::between(0.5, 100.0);
    e.range.d_m = Interval::between(10.0, 5000.0);
    e.range.h_ue_m = Interval::between(1.5, 22.5);
    e.range.h_bs_m = Interval::exactly(25.0);
    e.los_bound = id(TR38901, UMa, Los, Breakpoint);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(TR38901, UMa, Nlos, CI);
    e.mean = CiSpec{{3.0}};
    e.sigma_sf_db = 7.8;
    e.range.fc_ghz = Interval::between(0.5, 100.0);
    e.range.d_m = Interval::between(10.0, 5000.0);
    e.range.h_ue_m = Interval::between(1.5, 22.5);
    e.range.h_bs_m = Interval::exactly(25.0);
    path_loss_.push_back(e);

    e = {};
    e.id = id(TR38901, InHMixedOffice, Los, CI);
    e.mean = CiSpec{{1.73}};
    e.sigma_sf_db = 3.0;
    e.range = ci_range(0.5, 100.0);
    e.range.d_m = Interval::between(1.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(TR38901, InHMixedOffice, Nlos, ABG);
    e.mean = AbgSpec{{3.83, 17.30, 2.49}};
    e.sigma_sf_db = 8.03;
    e.range = ci_range(0.5, 100.0);
    e.range.d_m = Interval::between(1.0, 86.0);
    e.los_bound = id(TR38901, InHMixedOffice, Los, CI);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(TR38901, InHMixedOffice, Nlos, CI);
    e.mean = CiSpec{{3.19}};
    e.sigma_sf_db = 8.29;
    e.range = ci_range(0.5, 100.0);
    e.range.d_m = Interval::between(1.0, 86.0);
    path_loss_.push_back(e);
  }

  // ---------------------------------------------------------------- METIS
  {
    PathLossEntry e;
    e.id = id(METIS, UMiStreetCanyon, Los, Breakpoint);
    e.mean = MetisUmiLosSpec{};
    e.sigma_sf_db = 3.1;
    e.range.fc_ghz = Interval::between(0.8, 60.0);
    e.range.d_m = Interval::between(10.0, 500.0);
    e.range.d_kind = DistanceKind::D3D;
    e.range.h_bs_m = kAboveOneMeter;
    e.range.h_ue_m = kAboveOneMeter;
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(METIS, UMiStreetCanyon, Nlos, ABG);
    e.mean = AbgSpec{{3.67, 23.15, 2.6}, DistanceKind::D3D, 0.3, 0.0};
    e.sigma_sf_db = 4.0;
    e.range.fc_ghz = Interval::between(0.45, 6.0);
    e.range.d_m = Interval::between(10.0, 2000.0);
    e.range.h_ue_m = Interval::between(1.5, 22.5);
    e.range.h_bs_m = Interval::exactly(10.0);
    e.los_bound = id(METIS, UMiStreetCanyon, Los, Breakpoint);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(METIS, UMa, Los, Breakpoint);
    e.mean = BreakpointLosSpec{28.0, 22.0, 9.0, BreakpointRule::Tr38901};
    e.sigma_sf_db = 4.0;
    e.range.fc_ghz = Interval::between(0.45, 6.0);
    e.range.d_m = Interval::between(10.0, 5000.0);
    e.range.h_ue_m = Interval::between(1.5, 22.5);
    e.range.h_bs_m = Interval::exactly(25.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(METIS, UMa, Nlos, NineCoefficient);
    e.mean = NineCoefficientSpec{161.94, false, 0.6};
    e.sigma_sf_db = 6.0;
    e.range.fc_ghz = Interval::between(0.45, 6.0);
    e.range.d_m = Interval::between(10.0, 5000.0);
    e.range.h_ue_m = Interval::between(1.5, 22.5);
    e.range.h_bs_m = Interval::exactly(25.0);
    e.los_bound = id(METIS, UMa, Los, Breakpoint);
    e.env_defaults = EnvironmentConstants{20.0, 20.0};
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(METIS, InHShoppingMall, Los, AB);
    e.mean = AbgSpec{{1.84, 68.8, 0.0}, D2D};
    e.sigma_sf_db = 2.0;
    e.range.fc_ghz = Interval::exactly(63.0);
    e.range.d_m = Interval::between(1.5, 13.4);
    e.range.h_bs_m = Interval::exactly(2.0);
    e.range.h_ue_m = Interval::exactly(2.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(METIS, InHShoppingMall, Nlos, AB);
    e.mean = AbgSpec{{0.359, 94.3, 0.0}, D2D};
    e.sigma_sf_db = 2.0;
    e.range.fc_ghz = Interval::exactly(63.0);
    e.range.d_m = Interval::between(4.0, 16.1);
    e.range.h_bs_m = Interval::exactly(2.0);
    e.range.h_ue_m = Interval::exactly(2.0);
    e.cell_default = true;
    path_loss_.push_back(e);
  }

  // -------------------------------------------------------------- mmMAGIC
  {
    PathLossEntry e;
    e.id = id(MmMagic, UMiStreetCanyon, Los, ABG);
    e.mean = AbgSpec{{1.92, 32.9, 2.08}};
    e.sigma_sf_db = 2.0;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(MmMagic, UMiStreetCanyon, Nlos, ABG);
    e.mean = AbgSpec{{4.5, 31.0, 2.0}};
    e.sigma_sf_db = 7.82;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(MmMagic, InHMixedOffice, Los, ABG);
    e.mean = AbgSpec{{1.38, 33.6, 2.03}};
    e.sigma_sf_db = 1.18;
    e.range = ci_range(6.0, 100.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(MmMagic, InHMixedOffice, Nlos, ABG);
    e.mean = AbgSpec{{3.69, 15.2, 2.68}};
    e.sigma_sf_db = 8.03;
    e.range = ci_range(6.0, 100.0);
    e.los_bound = id(MmMagic, InHMixedOffice, Los, ABG);
    e.cell_default = true;
    path_loss_.push_back(e);
  }

  // -------------------------------------------------------- ITU-R M.2135
  // No shadow-fading values are printed for these rows; they are stored as
  // 0 (no stochastic term), matching the blank-sigma convention.
  {
    PathLossEntry e;
    e.id = id(IturM2135, RMa, Los, IturRmaLos);
    e.mean = IturRmaLosSpec{};
    e.sigma_sf_db = 0.0;
    e.range.d_m = Interval::between(10.0, 10000.0);
    e.range.h_bs_m = Interval::between(10.0, 150.0);
    e.range.h_ue_m = Interval::between(1.0, 10.0);
    e.range.street_width_m = Interval::between(5.0, 50.0);
    e.range.building_height_m = Interval::between(5.0, 50.0);
    e.env_defaults = EnvironmentConstants{20.0, 5.0};
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(IturM2135, RMa, Nlos, NineCoefficient);
    e.mean = NineCoefficientSpec{161.04, true};
    e.sigma_sf_db = 0.0;
    e.range.d_m = Interval::between(10.0, 5000.0);
    e.range.h_bs_m = Interval::between(10.0, 150.0);
    e.range.h_ue_m = Interval::between(1.0, 10.0);
    e.range.street_width_m = Interval::between(5.0, 50.0);
    e.range.building_height_m = Interval::between(5.0, 50.0);
    e.los_bound = id(IturM2135, RMa, Los, IturRmaLos);
    e.env_defaults = EnvironmentConstants{20.0, 5.0};
    e.cell_default = true;
    path_loss_.push_back(e);
  }

  // -------------------------------------------------------------- NYU RMa
  {
    PathLossEntry e;
    e.id = id(NYU, RMa, Los, CIH);
    e.mean = CihSpec{{2.31, -0.03, 35.0}};
    e.sigma_sf_db = 1.7;
    e.range.d_m = Interval::at_least(1.0);
    e.range.d_kind = DistanceKind::D3D;
    e.range.h_bs_m = Interval::between(10.0, 150.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(NYU, RMa, Nlos, CIH);
    e.mean = CihSpec{{3.07, -0.049, 35.0}};
    e.sigma_sf_db = 6.7;
    e.range.d_m = Interval::at_least(1.0);
    e.range.d_kind = DistanceKind::D3D;
    e.range.h_bs_m = Interval::between(10.0, 150.0);
    e.cell_default = true;
    path_loss_.push_back(e);
  }

  // -------------------------------------------------------- IEEE 802.11ad
  // The LOS row prints no shadowing term; stored as 0.
  {
    PathLossEntry e;
    e.id = id(Ieee80211ad, InHMixedOffice, Los, AB);
    e.mean = AbgSpec{{2.0, 32.5, 2.0}, D2D};
    e.sigma_sf_db = 0.0;
    e.range.fc_ghz = Interval::between(57.0, 63.0);
    e.range.d_m = Interval::at_least(1.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(Ieee80211ad, InHMixedOffice, Nlos, ABStaSta);
    e.mean = AbgSpec{{0.6, 51.5, 2.0}, D2D};
    e.sigma_sf_db = 3.3;
    e.range.fc_ghz = Interval::between(57.0, 63.0);
    e.range.d_m = Interval::at_least(1.0);
    e.cell_default = true;
    path_loss_.push_back(e);

    e = {};
    e.id = id(Ieee80211ad, InHMixedOffice, Nlos, ABStaAp);
    e.mean = AbgSpec{{1.4, 45.5, 2.0}, DistanceKind::D3D};
    e.sigma_sf_db = 3.0;
    e.range.fc_ghz = Interval::between(57.0, 63.0);
    e.range.d_m = Interval::at_least(1.0);
    e.range.d_kind = DistanceKind::D3D;
    path_loss_.push_back(e);
  }

  // ======================================================= LOS probability
  {
    LosProbEntry e;
    e.id = id(TR38901, UMiStreetCanyon, Los, D1D2);
    e.spec = D1D2Spec{{18.0, 36.0}};
    e.indoor_distance_rule = true;
    e.cell_default = true;
    los_prob_.push_back(e);

    e = {};
    e.id = id(FiveGCM, UMiStreetCanyon, Los, D1D2);
    e.spec = D1D2Spec{{20.0, 39.0}};
    e.cell_default = true;
    los_prob_.push_back(e);

    e = {};
    e.id = id(FiveGCM, UMiStreetCanyon, Los, NYUSquared);
    e.spec = D1D2Spec{{22.0, 100.0, true}};
    los_prob_.push_back(e);

    e = {};
    e.id = id(METIS, UMiStreetCanyon, Los, D1D2);
    e.spec = D1D2Spec{{18.0, 36.0}};
    e.indoor_distance_rule = true;
    e.range.d_m = Interval::at_least(10.0);
    e.cell_default = true;
    los_prob_.push_back(e);

    e = {};
    e.id = id(MmMagic, UMiStreetCanyon, Los, D1D2);
    e.spec = D1D2Spec{{20.0, 39.0}};
    e.indoor_distance_rule = true;
    e.cell_default = true;
    los_prob_.push_back(e);

    e = {};
    e.id = id(TR38901, UMa, Los, D1D2);
    e.spec = D1D2Spec{{18.0, 63.0}, true};
    e.indoor_distance_rule = true;
    e.range.h_ue_m = Interval::between(1.5, 23.0);
    e.cell_default = true;
    los_prob_.push_back(e);

    e = {};
    e.id = id(FiveGCM, UMa, Los, D1D2);
    e.spec = D1D2Spec{{20.0, 66.0}, true};
    e.range.h_ue_m = Interval::between(1.5, 23.0);
    e.cell_default = true;
    los_prob_.push_back(e);

    e = {};
    e.id = id(FiveGCM, UMa, Los, NYUSquared);
    e.spec = D1D2Spec{{20.0, 160.0, true}, true};
    e.range.h_ue_m = Interval::between(1.5, 23.0);
    los_prob_.push_back(e);

    e = {};
    e.id = id(METIS, UMa, Los, D1D2);
    e.spec = D1D2Spec{{18.0, 63.0}, true};
    e.indoor_distance_rule = true;
    e.range.d_m = Interval::at_least(35.0);
    e.range.h_ue_m = Interval::between(1.5, 23.0);
    e.cell_default = true;
    los_prob_.push_back(e);

    e = {};
    e.id = id(TR38901, InHMixedOffice, Los, InHPiecewise);
    e.spec = InHPiecewiseSpec{InHPiecewiseParams::mixed_office()};
    e.cell_default = true;
    los_prob_.push_back(e);

    e = {};
    e.id = id(TR38901, InHOpenOffice, Los, InHPiecewise);
    e.spec = InHPiecewiseSpec{InHPiecewiseParams::open_office()};
    e.cell_default = true;
    los_prob_.push_back(e);

    e = {};
    e.id = id(FiveGCM, InHMixedOffice, Los, InHPiecewise);
    e.spec = InHPiecewiseSpec{InHPiecewiseParams::mixed_office()};
    e.cell_default = true;
    los_prob_.push_back(e);

    e = {};
    e.id = id(MmMagic, InHMixedOffice, Los, InHPiecewise);
    e.spec = InHPiecewiseSpec{InHPiecewiseParams::mixed_office()};
    e.cell_default = true;
    los_prob_.push_back(e);

    e = {};
    e.id = id(TR38901, RMa, Los, RMaExponential);
    e.spec = RMaExponentialSpec{};
    e.cell_default = true;
    los_prob_.push_back(e);

    e = {};
    e.id = id(IturM2135, RMa, Los, RMaExponential);
    e.spec = RMaExponentialSpec{};
    e.cell_default = true;
    los_prob_.push_back(e);
  }

  // Construction-time sanity: unique ids, resolvable LOS bounds, one
  // default per populated cell.
  for (std::size_t i = 0; i < path_loss_.size(); ++i) {
    for (std::size_t j = i + 1; j < path_loss_.size(); ++j) {
      if (path_loss_[i].id == path_loss_[j].id) {
        throw std::logic_error("duplicate path loss id " + to_string(path_loss_[i].id));
      }
    }
    if (path_loss_[i].los_bound && !find_path_loss(*path_loss_[i].los_bound)) {
      throw std::logic_error("unresolvable LOS bound for " + to_string(path_loss_[i].id));
    }
  }
  for (std::size_t i = 0; i < los_prob_.size(); ++i) {
    for (std::size_t j = i + 1; j < los_prob_.size(); ++j) {
      if (los_prob_[i].id == los_prob_[j].id) {
        throw std::logic_error("duplicate LOS probability id " + to_string(los_prob_[i].id));
      }
    }
  }
}

const Registry& Registry::instance() {
  static const Registry registry;
  return registry;
}

const PathLossEntry* Registry::find_path_loss(const ModelId& id) const {
  for (const auto& e : path_loss_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const LosProbEntry* Registry::find_los_prob(const ModelId& id) const {
  for (const auto& e : los_prob_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const PathLossEntry& Registry::path_loss(const ModelId& id) const {
  if (const auto* e = find_path_loss(id)) return *e;
  throw std::out_of_range("no path loss model registered as " + to_string(id));
}

const LosProbEntry& Registry::los_prob(const ModelId& id) const {
  if (const auto* e = find_los_prob(id)) return *e;
  throw std::out_of_range("no LOS probability model registered as " + to_string(id));
}

const ApplicabilityRange* Registry::find_range(const ModelId& id) const {
  if (const auto* e = find_path_loss(id)) return &e->range;
  if (const auto* e = find_los_prob(id)) return &e->range;
  return nullptr;
}

std::span<const PathLossEntry> Registry::all_path_loss() const { return path_loss_; }
std::span<const LosProbEntry> Registry::all_los_prob() const { return los_prob_; }

ModelId Registry::resolve_path_loss(Org org, Scenario scenario, Visibility vis,
                                    std::optional<Family> family) const {
  if (family) {
    return path_loss(ModelId{org, scenario, vis, *family}).id;
  }
  for (const auto& e : path_loss_) {
    if (e.id.org == org && e.id.scenario == scenario && e.id.visibility == vis &&
        e.cell_default) {
      return e.id;
    }
  }
  throw std::out_of_range(std::string("no path loss model registered for ") +
                          std::string(to_string(org)) + ":" +
                          std::string(to_string(scenario)) + ":" +
                          std::string(to_string(vis)));
}

ModelId Registry::resolve_los_prob(Org org, Scenario scenario,
                                   std::optional<Family> family) const {
  if (family) {
    return los_prob(ModelId{org, scenario, Visibility::Los, *family}).id;
  }
  for (const auto& e : los_prob_) {
    if (e.id.org == org && e.id.scenario == scenario && e.cell_default) {
      return e.id;
    }
  }
  throw std::out_of_range(std::string("no LOS probability model registered for ") +
                          std::string(to_string(org)) + ":" +
                          std::string(to_string(scenario)));
}

namespace {

std::vector<std::string_view> split_colon(std::string_view text) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = text.find(':');
    if (pos == std::string_view::npos) {
      parts.push_back(text);
      return parts;
    }
    parts.push_back(text.substr(0, pos));
    text.remove_prefix(pos + 1);
  }
}

}  // namespace

ModelId Registry::parse_path_loss_id(std::string_view text) const {
  const auto parts = split_colon(text);
  if (parts.size() < 3 || parts.size() > 4) {
    throw std::invalid_argument("expected org:scenario:visibility[:family], got '" +
                                std::string(text) + "'");
  }
  std::optional<Family> family;
  if (parts.size() == 4) family = parse_family(parts[3]);
  return resolve_path_loss(parse_org(parts[0]), parse_scenario(parts[1]),
                           parse_visibility(parts[2]), family);
}

ModelId Registry::parse_los_prob_id(std::string_view text) const {
  const auto parts = split_colon(text);
  if (parts.size() < 2 || parts.size() > 3) {
    throw std::invalid_argument("expected org:scenario[:family], got '" +
                                std::string(text) + "'");
  }
  std::optional<Family> family;
  if (parts.size() == 3) family = parse_family(parts[2]);
  return resolve_los_prob(parse_org(parts[0]), parse_scenario(parts[1]), family);
}

DefaultHeights default_heights(Scenario s) {
  switch (s) {
    case Scenario::UMiStreetCanyon:
    case Scenario::UMiOpenSquare:
      return {10.0, 1.5};
    case Scenario::UMa:
      return {25.0, 1.5};
    case Scenario::InHMixedOffice:
    case Scenario::InHOpenOffice:
      return {3.0, 1.5};
    case Scenario::InHShoppingMall:
      return {2.0, 2.0};
    case Scenario::RMa:
      return {35.0, 1.5};
  }
  throw std::logic_error("unknown scenario");
}

double default_correlation_distance_m(Scenario s) {
  switch (s) {
    case Scenario::UMiStreetCanyon:
    case Scenario::UMiOpenSquare:
      return 12.0;
    case Scenario::UMa:
      return 50.0;
    case Scenario::InHMixedOffice:
    case Scenario::InHOpenOffice:
    case Scenario::InHShoppingMall:
      return 10.0;
    case Scenario::RMa:
      return 50.0;
  }
  throw std::logic_error("unknown scenario");
}

namespace {

void check_axis(std::vector<Violation>& out, const char* axis, double value,
                const Interval& allowed, const char* unit) {
  if (allowed.contains(value)) return;
  Violation v;
  v.axis = axis;
  v.value = value;
  v.allowed = allowed;
  std::string msg = std::string(axis) + " " + format_quantity(value) + " " + unit + " ";
  if (allowed.lo == allowed.hi) {
    msg += "differs from the model's " + format_quantity(allowed.lo) + " " + unit;
  } else if (!std::isfinite(allowed.hi)) {
    msg += "below " + format_quantity(allowed.lo) + " " + unit;
  } else if (!std::isfinite(allowed.lo)) {
    msg += "above " + format_quantity(allowed.hi) + " " + unit;
  } else {
    msg += "out of " + format_quantity(allowed.lo) + "-" + format_quantity(allowed.hi) +
           " " + unit;
  }
  v.message = std::move(msg);
  out.push_back(std::move(v));
}

}  // namespace

std::vector<Violation> check_applicability(const ModelId& model, Frequency fc,
                                           const LinkGeometry& geom,
                                           const std::optional<EnvironmentConstants>& env) {
  const Registry& reg = Registry::instance();
  const ApplicabilityRange* range = reg.find_range(model);
  if (!range) {
    throw std::out_of_range("no model registered as " + to_string(model));
  }

  std::vector<Violation> out;
  check_axis(out, "fc", fc.ghz(), range->fc_ghz, "GHz");
  if (range->d_kind == DistanceKind::D2D) {
    check_axis(out, "d2d", geom.d2d_m, range->d_m, "m");
  } else {
    check_axis(out, "d3d", geom.d3d_m, range->d_m, "m");
  }
  check_axis(out, "hbs", geom.h_bs_m, range->h_bs_m, "m");
  check_axis(out, "hue", geom.h_ue_m, range->h_ue_m, "m");
  if (env) {
    if (range->street_width_m) {
      check_axis(out, "w", env->street_width_m, *range->street_width_m, "m");
    }
    if (range->building_height_m) {
      check_axis(out, "h", env->building_height_m, *range->building_height_m, "m");
    }
  }
  return out;
}

}  // namespace mmwprop
