#pragma once

#include <optional>
#include <variant>

#include "mmwprop/applicability.hpp"
#include "mmwprop/geometry.hpp"
#include "mmwprop/model_id.hpp"
#include "mmwprop/units.hpp"

namespace mmwprop {

// All evaluators return the deterministic mean path loss in dB. Shadow
// fading is additive on top and sampled separately (see shadowing.hpp), so
// model comparison and fitting stay noise-free.

inline constexpr double kSpeedOfLight = 3.0e8;  // m/s, as the standards use

/// Close-in (CI) model: free-space anchored at 1 m, single exponent n.
struct CiParams {
  double n;  // path loss exponent
};

/// CI with a frequency-weighted exponent about the anchor f0.
struct CifParams {
  double n;
  double b;        // linear frequency dependence of the exponent
  double f0_ghz;   // anchor frequency
};

/// CI with a BS-height-weighted exponent about the reference height h_b0.
struct CihParams {
  double n;
  double b_tx;     // linear height dependence of the exponent
  double h_b0_m;   // reference BS height
};

/// Floating-intercept model: 10 a log10(d) + b + 10 g log10(fc).
struct AbgParams {
  double alpha;
  double beta;   // offset in dB
  double gamma;
};

struct DualCifParams {
  double n1, b1;
  double f0_ghz;
  double n2, b2;
  double dbp_m;  // breakpoint distance
};

struct DualAbgParams {
  double alpha1, beta1, gamma;
  double alpha2;
  double dbp_m;
};

using DualSlopeParams = std::variant<DualCifParams, DualAbgParams>;

/// Free space path loss at the 1 m reference: 32.4 + 20 log10(fc).
double fspl_1m(Frequency fc);

/// d3d < 1 m throws std::domain_error (below the reference distance).
double pl_ci(Frequency fc, double d3d_m, const CiParams& p);
double pl_cif(Frequency fc, double d_m, const CifParams& p);
/// Additionally requires 10 m <= h_bs <= 150 m.
double pl_cih(Frequency fc, double d_m, double h_bs_m, const CihParams& p);
double pl_abg(Frequency fc, double d_m, const AbgParams& p);

/// Continuous at the breakpoint by construction: the post-breakpoint branch
/// is anchored at the pre-breakpoint value at dbp.
double pl_dual_slope(Frequency fc, double d_m, const DualSlopeParams& p);

/// Breakpoint distance with 1 m effective-height offsets:
/// 4 (h_bs-1)(h_ue-1) fc 1e9 / c. Heights <= 1 m throw std::domain_error.
double breakpoint_tr38901(Frequency fc, double h_bs_m, double h_ue_m);

/// The same with the frequency-dependent scaling factor applied.
double breakpoint_metis(Frequency fc, double h_bs_m, double h_ue_m);

/// 2 pi h_bs h_ue fc 1e9 / c (no height offsets).
double breakpoint_itur(Frequency fc, double h_bs_m, double h_ue_m);

/// PL1/PL2 breakpoint LOS composites. The branch is selected on d2d, the
/// loss itself uses d3d of the geometry.
double pl_tr38901_umi_los(Frequency fc, const LinkGeometry& geom);
double pl_tr38901_uma_los(Frequency fc, const LinkGeometry& geom);

/// Mismatch |PL1 - PL2| of the printed branch pair evaluated at the
/// breakpoint (a diagnostic; the printed correction term makes it ~0).
double tr38901_breakpoint_mismatch(Frequency fc, double h_bs_m, double h_ue_m,
                                   Scenario scenario);

/// Pre-breakpoint slope 22, post-breakpoint slope 40 anchored at the
/// breakpoint value, with the frequency-dependent loss offset PL0.
double pl_metis_umi_los(Frequency fc, double d1_m, double h_bs_m, double h_ue_m);
double metis_pl0(Frequency fc);

/// Raw NLOS forms lower-bounded by the corresponding LOS composite.
double pl_metis_umi_nlos(Frequency fc, double d3d_m, double h_bs_m, double h_ue_m);
double pl_metis_uma_nlos(Frequency fc, const LinkGeometry& geom,
                         const EnvironmentConstants& env);

/// Rural macro per ITU-R M.2135: the long-form LOS model with its
/// 2-pi-heights breakpoint, and the nine-coefficient NLOS form bounded
/// below by the LOS value.
double pl_itur_rma_los(Frequency fc, double d3d_m, const EnvironmentConstants& env,
                       double h_bs_m, double h_ue_m);
double pl_itur_rma_nlos(Frequency fc, double d3d_m, const EnvironmentConstants& env,
                        double h_bs_m, double h_ue_m);

enum class Ieee80211adLink { StaSta, StaAp };

/// 60 GHz WLAN indoor rows. LOS uses d2d; NLOS is StaSta over d2d or StaAp
/// over d3d.
double pl_80211ad(Frequency fc, double d_m, Ieee80211adLink link, Visibility vis);

/// Registry dispatcher: evaluates the model registered under the id with
/// its printed parameter values. env falls back to the model's default
/// constants when not supplied. Throws std::out_of_range for unknown ids;
/// domain errors propagate from the evaluators.
double mean_path_loss(const ModelId& model, Frequency fc, const LinkGeometry& geom,
                      const std::optional<EnvironmentConstants>& env = std::nullopt);

}  // namespace mmwprop
