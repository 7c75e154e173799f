#include "mmwprop/los_probability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mmwprop/registry.hpp"

namespace mmwprop {

InHPiecewiseParams InHPiecewiseParams::mixed_office() {
  return {1.2, 4.7, 6.5, 32.6, 0.32};
}

InHPiecewiseParams InHPiecewiseParams::open_office() {
  return {5.0, 70.8, 49.0, 211.7, 0.54};
}

double los_prob_d1d2(double d2d_m, const D1D2Params& p) {
  if (d2d_m < 0.0) {
    throw std::domain_error("d2d must be non-negative");
  }
  if (p.d1_m <= 0.0 || p.d2_m <= 0.0) {
    throw std::domain_error("d1 and d2 must be positive");
  }
  if (d2d_m == 0.0) {
    return 1.0;  // limit value, LOS is certain at zero separation
  }
  const double decay = std::exp(-d2d_m / p.d2_m);
  double v = std::min(p.d1_m / d2d_m, 1.0) * (1.0 - decay) + decay;
  if (p.squared) v *= v;
  return v;
}

double uma_height_correction(double d2d_m, double h_ue_m) {
  if (h_ue_m > 23.0) {
    throw std::domain_error("UMa height correction is undefined above a 23 m UE height");
  }
  if (h_ue_m < 13.0) {
    return 0.0;
  }
  const double g =
      d2d_m <= 18.0 ? 0.0 : 1.25e-6 * d2d_m * d2d_m * d2d_m * std::exp(-d2d_m / 150.0);
  return std::pow((h_ue_m - 13.0) / 10.0, 1.5) * g;
}

double los_prob_uma_raw(double d2d_m, double h_ue_m, const D1D2Params& p) {
  D1D2Params base = p;
  base.squared = false;
  double v = los_prob_d1d2(d2d_m, base) * (1.0 + uma_height_correction(d2d_m, h_ue_m));
  if (p.squared) v *= v;  // the square applies to the whole product
  return v;
}

double los_prob_uma(double d2d_m, double h_ue_m, const D1D2Params& p) {
  return std::clamp(los_prob_uma_raw(d2d_m, h_ue_m, p), 0.0, 1.0);
}

double los_prob_inh(double d2d_m, const InHPiecewiseParams& p) {
  if (d2d_m < 0.0) {
    throw std::domain_error("d2d must be non-negative");
  }
  if (d2d_m <= p.inner_break_m) {
    return 1.0;
  }
  if (d2d_m < p.outer_break_m) {
    return std::exp(-(d2d_m - p.inner_break_m) / p.inner_decay_m);
  }
  return std::exp(-(d2d_m - p.outer_break_m) / p.outer_decay_m) * p.outer_scale;
}

double los_prob_rma(double d2d_m) {
  if (d2d_m < 0.0) {
    throw std::domain_error("d2d must be non-negative");
  }
  return d2d_m <= 10.0 ? 1.0 : std::exp(-(d2d_m - 10.0) / 1000.0);
}

double los_probability(const ModelId& model, const LinkGeometry& geom) {
  const LosProbEntry& entry = Registry::instance().los_prob(model);

  double d2d = geom.d2d_m;
  if (entry.indoor_distance_rule && geom.d2d_in_m) {
    if (!geom.d2d_out_m) {
      throw std::domain_error("indoor-user rule needs d2d_out in the geometry");
    }
    d2d = *geom.d2d_out_m;
  }

  struct Eval {
    double d2d;
    double h_ue;
    double operator()(const D1D2Spec& s) const {
      return s.height_correction ? los_prob_uma(d2d, h_ue, s.p)
                                 : los_prob_d1d2(d2d, s.p);
    }
    double operator()(const InHPiecewiseSpec& s) const { return los_prob_inh(d2d, s.p); }
    double operator()(const RMaExponentialSpec&) const { return los_prob_rma(d2d); }
  };
  return std::visit(Eval{d2d, geom.h_ue_m}, entry.spec);
}

}  // namespace mmwprop
