#include "mmwprop/path_loss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mmwprop/registry.hpp"

namespace mmwprop {

namespace {

void require_at_least_1m(double d_m) {
  if (!(d_m >= 1.0)) {
    throw std::domain_error("distance below the 1 m reference");
  }
}

}  // namespace

double fspl_1m(Frequency fc) { return 32.4 + 20.0 * std::log10(fc.ghz()); }

double pl_ci(Frequency fc, double d3d_m, const CiParams& p) {
  require_at_least_1m(d3d_m);
  return fspl_1m(fc) + 10.0 * p.n * std::log10(d3d_m);
}

double pl_cif(Frequency fc, double d_m, const CifParams& p) {
  require_at_least_1m(d_m);
  if (p.f0_ghz <= 0.0) {
    throw std::domain_error("CIF anchor frequency must be positive");
  }
  const double slope = 10.0 * p.n * (1.0 + p.b * (fc.ghz() - p.f0_ghz) / p.f0_ghz);
  return fspl_1m(fc) + slope * std::log10(d_m);
}

double pl_cih(Frequency fc, double d_m, double h_bs_m, const CihParams& p) {
  require_at_least_1m(d_m);
  if (h_bs_m < 10.0 || h_bs_m > 150.0) {
    throw std::domain_error("CIH is defined for BS heights of 10 m to 150 m");
  }
  const double slope = 10.0 * p.n * (1.0 + p.b_tx * (h_bs_m - p.h_b0_m) / p.h_b0_m);
  return fspl_1m(fc) + slope * std::log10(d_m);
}

double pl_abg(Frequency fc, double d_m, const AbgParams& p) {
  require_at_least_1m(d_m);
  return 10.0 * p.alpha * std::log10(d_m) + p.beta + 10.0 * p.gamma * std::log10(fc.ghz());
}

double pl_dual_slope(Frequency fc, double d_m, const DualSlopeParams& p) {
  require_at_least_1m(d_m);
  if (const auto* cif = std::get_if<DualCifParams>(&p)) {
    const double fterm = (fc.ghz() - cif->f0_ghz) / cif->f0_ghz;
    const double s1 = 10.0 * cif->n1 * (1.0 + cif->b1 * fterm);
    const double s2 = 10.0 * cif->n2 * (1.0 + cif->b2 * fterm);
    if (d_m <= cif->dbp_m) {
      return fspl_1m(fc) + s1 * std::log10(d_m);
    }
    return fspl_1m(fc) + s1 * std::log10(cif->dbp_m) + s2 * std::log10(d_m / cif->dbp_m);
  }
  const auto& abg = std::get<DualAbgParams>(p);
  const double common = abg.beta1 + 10.0 * abg.gamma * std::log10(fc.ghz());
  if (d_m <= abg.dbp_m) {
    return 10.0 * abg.alpha1 * std::log10(d_m) + common;
  }
  return 10.0 * abg.alpha1 * std::log10(abg.dbp_m) + common +
         10.0 * abg.alpha2 * std::log10(d_m / abg.dbp_m);
}

double breakpoint_tr38901(Frequency fc, double h_bs_m, double h_ue_m) {
  if (h_bs_m <= 1.0 || h_ue_m <= 1.0) {
    throw std::domain_error("effective antenna heights require heights above 1 m");
  }
  return 4.0 * (h_bs_m - 1.0) * (h_ue_m - 1.0) * fc.ghz() * 1e9 / kSpeedOfLight;
}

double breakpoint_metis(Frequency fc, double h_bs_m, double h_ue_m) {
  if (h_bs_m <= 1.0 || h_ue_m <= 1.0) {
    throw std::domain_error("effective antenna heights require heights above 1 m");
  }
  const double lambda_m = kSpeedOfLight / (fc.ghz() * 1e9);
  const double scale = 0.87 * std::exp(-std::log10(fc.ghz()) / 0.65);
  return scale * 4.0 * (h_bs_m - 1.0) * (h_ue_m - 1.0) / lambda_m;
}

double breakpoint_itur(Frequency fc, double h_bs_m, double h_ue_m) {
  if (h_bs_m <= 0.0 || h_ue_m <= 0.0) {
    throw std::domain_error("antenna heights must be positive");
  }
  return 2.0 * M_PI * h_bs_m * h_ue_m * fc.ghz() * 1e9 / kSpeedOfLight;
}

namespace {

// PL1/PL2 composite shared by the 3GPP UMi/UMa LOS rows and the METIS UMa
// LOS row. The branch is selected on d2d; the loss uses d3d.
double pl_breakpoint_los(Frequency fc, const LinkGeometry& geom,
                         const BreakpointLosSpec& s) {
  const double dbp = s.rule == BreakpointRule::Metis
                         ? breakpoint_metis(fc, geom.h_bs_m, geom.h_ue_m)
                         : breakpoint_tr38901(fc, geom.h_bs_m, geom.h_ue_m);
  require_at_least_1m(geom.d3d_m);
  const double common = s.intercept_db + 20.0 * std::log10(fc.ghz());
  if (geom.d2d_m <= dbp) {
    return common + s.slope10 * std::log10(geom.d3d_m);
  }
  const double dh = geom.h_bs_m - geom.h_ue_m;
  return common + 40.0 * std::log10(geom.d3d_m) -
         s.bp_correction * std::log10(dbp * dbp + dh * dh);
}

constexpr BreakpointLosSpec kUmiLosSpec{32.4, 21.0, 9.5, BreakpointRule::Tr38901};
constexpr BreakpointLosSpec kUmaLosSpec{28.0, 22.0, 9.0, BreakpointRule::Tr38901};

}  // namespace

double pl_tr38901_umi_los(Frequency fc, const LinkGeometry& geom) {
  return pl_breakpoint_los(fc, geom, kUmiLosSpec);
}

double pl_tr38901_uma_los(Frequency fc, const LinkGeometry& geom) {
  return pl_breakpoint_los(fc, geom, kUmaLosSpec);
}

double tr38901_breakpoint_mismatch(Frequency fc, double h_bs_m, double h_ue_m,
                                   Scenario scenario) {
  const BreakpointLosSpec& s =
      scenario == Scenario::UMa ? kUmaLosSpec : kUmiLosSpec;
  const double dbp = breakpoint_tr38901(fc, h_bs_m, h_ue_m);
  const LinkGeometry at_bp = LinkGeometry::from_d2d(dbp, h_bs_m, h_ue_m);
  const double common = s.intercept_db + 20.0 * std::log10(fc.ghz());
  const double pl1 = common + s.slope10 * std::log10(at_bp.d3d_m);
  const double dh = h_bs_m - h_ue_m;
  const double pl2 = common + 40.0 * std::log10(at_bp.d3d_m) -
                     s.bp_correction * std::log10(dbp * dbp + dh * dh);
  return std::abs(pl1 - pl2);
}

double metis_pl0(Frequency fc) { return -1.38 * std::log10(fc.ghz()) + 3.34; }

double pl_metis_umi_los(Frequency fc, double d1_m, double h_bs_m, double h_ue_m) {
  require_at_least_1m(d1_m);
  const double dbp = breakpoint_metis(fc, h_bs_m, h_ue_m);
  const auto pl_pre = [&](double d) {
    return 22.0 * std::log10(d) + 28.0 + 20.0 * std::log10(fc.ghz()) + metis_pl0(fc);
  };
  if (d1_m <= dbp) {
    return pl_pre(d1_m);
  }
  return 40.0 * std::log10(d1_m / dbp) + pl_pre(dbp);
}

double pl_metis_umi_nlos(Frequency fc, double d3d_m, double h_bs_m, double h_ue_m) {
  require_at_least_1m(d3d_m);
  const double raw = 36.7 * std::log10(d3d_m) + 23.15 + 26.0 * std::log10(fc.ghz()) -
                     0.3 * h_ue_m;
  return std::max(pl_metis_umi_los(fc, d3d_m, h_bs_m, h_ue_m), raw);
}

namespace {

// Street-width/building-height NLOS form shared between the rural row
// (constant 161.04, quadratic UE term) and the METIS urban-macro row
// (constant 161.94, linear UE term).
double pl_nine_coefficient(Frequency fc, double d3d_m, const EnvironmentConstants& env,
                           double h_bs_m, double h_ue_m, const NineCoefficientSpec& s) {
  require_at_least_1m(d3d_m);
  if (env.street_width_m <= 0.0 || env.building_height_m <= 0.0) {
    throw std::domain_error("street width and building height must be positive");
  }
  if (h_bs_m <= 0.0 || h_ue_m <= 0.0) {
    throw std::domain_error("antenna heights must be positive");
  }
  const double w = env.street_width_m;
  const double h = env.building_height_m;
  const double ue_term =
      s.quadratic_ue_term
          ? 3.2 * std::pow(std::log10(11.75 * h_ue_m), 2.0) - 4.97
          : s.ue_slope * h_ue_m;
  return s.constant_db - 7.1 * std::log10(w) + 7.5 * std::log10(h) -
         (24.37 - 3.7 * (h / h_bs_m) * (h / h_bs_m)) * std::log10(h_bs_m) +
         (43.42 - 3.1 * std::log10(h_bs_m)) * (std::log10(d3d_m) - 3.0) +
         20.0 * std::log10(fc.ghz()) - ue_term;
}

}  // namespace

double pl_metis_uma_nlos(Frequency fc, const LinkGeometry& geom,
                         const EnvironmentConstants& env) {
  const NineCoefficientSpec spec{161.94, false, 0.6};
  const double raw =
      pl_nine_coefficient(fc, geom.d3d_m, env, geom.h_bs_m, geom.h_ue_m, spec);
  return std::max(pl_breakpoint_los(fc, geom, kUmaLosSpec), raw);
}

double pl_itur_rma_los(Frequency fc, double d3d_m, const EnvironmentConstants& env,
                       double h_bs_m, double h_ue_m) {
  if (!(d3d_m > 0.0)) {
    throw std::domain_error("distance must be positive");
  }
  const double h = env.building_height_m;
  if (h <= 0.0) {
    throw std::domain_error("building height must be positive");
  }
  const double h172 = std::pow(h, 1.72);
  const auto pl1 = [&](double d) {
    return 20.0 * std::log10(40.0 * M_PI * d * fc.ghz() / 3.0) +
           std::min(0.03 * h172, 10.0) * std::log10(d) -
           std::min(0.044 * h172, 14.77) + 0.002 * std::log10(h) * d;
  };
  const double dbp = breakpoint_itur(fc, h_bs_m, h_ue_m);
  if (d3d_m <= dbp) {
    return pl1(d3d_m);
  }
  return pl1(dbp) + 40.0 * std::log10(d3d_m / dbp);
}

double pl_itur_rma_nlos(Frequency fc, double d3d_m, const EnvironmentConstants& env,
                        double h_bs_m, double h_ue_m) {
  const NineCoefficientSpec spec{161.04, true};
  const double raw = pl_nine_coefficient(fc, d3d_m, env, h_bs_m, h_ue_m, spec);
  return std::max(pl_itur_rma_los(fc, d3d_m, env, h_bs_m, h_ue_m), raw);
}

double pl_80211ad(Frequency fc, double d_m, Ieee80211adLink link, Visibility vis) {
  if (!(d_m > 0.0)) {
    throw std::domain_error("distance must be positive");
  }
  const double fterm = 20.0 * std::log10(fc.ghz());
  if (vis == Visibility::Los) {
    return 32.5 + fterm + 20.0 * std::log10(d_m);
  }
  if (link == Ieee80211adLink::StaSta) {
    return 51.5 + fterm + 6.0 * std::log10(d_m);
  }
  return 45.5 + fterm + 14.0 * std::log10(d_m);
}

double mean_path_loss(const ModelId& model, Frequency fc, const LinkGeometry& geom,
                      const std::optional<EnvironmentConstants>& env) {
  const PathLossEntry& entry = Registry::instance().path_loss(model);
  const EnvironmentConstants constants =
      env.value_or(entry.env_defaults.value_or(EnvironmentConstants{}));

  struct Eval {
    Frequency fc;
    const LinkGeometry& geom;
    const EnvironmentConstants& env;

    double dist(DistanceKind k) const {
      return k == DistanceKind::D2D ? geom.d2d_m : geom.d3d_m;
    }

    double operator()(const CiSpec& s) const { return pl_ci(fc, geom.d3d_m, s.p); }
    double operator()(const CifSpec& s) const { return pl_cif(fc, geom.d3d_m, s.p); }
    double operator()(const CihSpec& s) const {
      return pl_cih(fc, geom.d3d_m, geom.h_bs_m, s.p);
    }
    double operator()(const AbgSpec& s) const {
      return pl_abg(fc, dist(s.dist), s.p) - s.ue_slope * (geom.h_ue_m - s.ue_ref_m);
    }
    double operator()(const DualSlopeSpec& s) const {
      return pl_dual_slope(fc, geom.d3d_m, s.p);
    }
    double operator()(const BreakpointLosSpec& s) const {
      return pl_breakpoint_los(fc, geom, s);
    }
    double operator()(const MetisUmiLosSpec&) const {
      return pl_metis_umi_los(fc, geom.d3d_m, geom.h_bs_m, geom.h_ue_m);
    }
    double operator()(const IturRmaLosSpec&) const {
      return pl_itur_rma_los(fc, geom.d3d_m, env, geom.h_bs_m, geom.h_ue_m);
    }
    double operator()(const NineCoefficientSpec& s) const {
      return pl_nine_coefficient(fc, geom.d3d_m, env, geom.h_bs_m, geom.h_ue_m, s);
    }
  };

  double value = std::visit(Eval{fc, geom, constants}, entry.mean);
  if (entry.los_bound) {
    value = std::max(value, mean_path_loss(*entry.los_bound, fc, geom, constants));
  }
  return value;
}

}  // namespace mmwprop
