#pragma once

#include "mmwprop/geometry.hpp"
#include "mmwprop/model_id.hpp"

namespace mmwprop {

/// Parameters of the d1/d2 LOS probability family:
///   P(d2d) = min(d1/d2d, 1) (1 - exp(-d2d/d2)) + exp(-d2d/d2)
/// optionally squared as a whole (the NYU variant).
struct D1D2Params {
  double d1_m;
  double d2_m;
  bool squared = false;
};

/// Piecewise-exponential indoor LOS probability. Branch boundaries are
/// strictly increasing; at a shared boundary the branch carrying the
/// closed comparison wins.
struct InHPiecewiseParams {
  double inner_break_m;   // P = 1 up to and including this distance
  double inner_decay_m;
  double outer_break_m;   // third branch from here on (inclusive)
  double outer_decay_m;
  double outer_scale;

  static InHPiecewiseParams mixed_office();
  static InHPiecewiseParams open_office();
};

/// d1/d2 family evaluated at a 2D separation. d2d == 0 returns exactly 1.
double los_prob_d1d2(double d2d_m, const D1D2Params& p);

/// UE-height correction of the urban-macro LOS probability: zero below a
/// 13 m UE height, a cubic-times-exponential growth term above 18 m of
/// separation. Defined for h_ue up to 23 m.
double uma_height_correction(double d2d_m, double h_ue_m);

/// Urban-macro form: d1/d2 value times (1 + C(d2d, h_ue)), squared as a
/// whole when the NYU flag is set, clamped to [0, 1].
/// Throws std::domain_error for h_ue above 23 m.
double los_prob_uma(double d2d_m, double h_ue_m, const D1D2Params& p);

/// Same product without the final clamp, for inspection.
double los_prob_uma_raw(double d2d_m, double h_ue_m, const D1D2Params& p);

/// Indoor piecewise forms, evaluated exactly as printed (including the
/// step at the outer branch boundary).
double los_prob_inh(double d2d_m, const InHPiecewiseParams& p);

/// Rural macro: 1 up to 10 m, exp(-(d2d-10)/1000) beyond.
double los_prob_rma(double d2d_m);

/// Registry dispatcher. Routes to the evaluator registered under the id;
/// substitutes d2d_out for d2d when the model specifies the indoor-user
/// rule and the geometry carries a split. Throws std::out_of_range for an
/// unknown model and std::domain_error when the indoor rule is requested
/// without a d2d_out.
double los_probability(const ModelId& model, const LinkGeometry& geom);

}  // namespace mmwprop
