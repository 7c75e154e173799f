#include "mmwprop/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace mmwprop {

double derive_d3d(double d2d_m, double h_bs_m, double h_ue_m) {
  if (d2d_m < 0.0) {
    throw std::domain_error("d2d must be non-negative");
  }
  if (h_bs_m <= 0.0 || h_ue_m <= 0.0) {
    throw std::domain_error("antenna heights must be positive");
  }
  return std::hypot(d2d_m, h_bs_m - h_ue_m);
}

LinkGeometry LinkGeometry::from_d2d(double d2d_m, double h_bs_m, double h_ue_m) {
  LinkGeometry g;
  g.d2d_m = d2d_m;
  g.d3d_m = derive_d3d(d2d_m, h_bs_m, h_ue_m);
  g.h_bs_m = h_bs_m;
  g.h_ue_m = h_ue_m;
  return g;
}

LinkGeometry LinkGeometry::from_d3d(double d3d_m, double h_bs_m, double h_ue_m) {
  if (h_bs_m <= 0.0 || h_ue_m <= 0.0) {
    throw std::domain_error("antenna heights must be positive");
  }
  const double dh = h_bs_m - h_ue_m;
  if (d3d_m < std::abs(dh)) {
    throw std::domain_error("d3d smaller than the antenna height difference");
  }
  LinkGeometry g;
  g.d3d_m = d3d_m;
  g.d2d_m = std::sqrt(std::max(0.0, d3d_m * d3d_m - dh * dh));
  g.h_bs_m = h_bs_m;
  g.h_ue_m = h_ue_m;
  return g;
}

LinkGeometry LinkGeometry::with_indoor_split(double d2d_out_m, double d2d_in_m) const {
  LinkGeometry g = *this;
  g.d2d_out_m = d2d_out_m;
  g.d2d_in_m = d2d_in_m;
  g.validate();
  return g;
}

void LinkGeometry::validate() const {
  if (h_bs_m <= 0.0 || h_ue_m <= 0.0) {
    throw std::domain_error("antenna heights must be positive");
  }
  if (d2d_m < 0.0 || d3d_m < d2d_m) {
    throw std::domain_error("requires d3d >= d2d >= 0");
  }
  const double expected = std::hypot(d2d_m, h_bs_m - h_ue_m);
  if (std::abs(d3d_m - expected) > 1e-9 * std::max(1.0, expected)) {
    throw std::domain_error("d3d inconsistent with d2d and the antenna heights");
  }
  if (d2d_out_m.has_value() != d2d_in_m.has_value()) {
    throw std::domain_error("indoor split requires both d2d_out and d2d_in");
  }
  if (d2d_out_m) {
    if (*d2d_out_m < 0.0 || *d2d_in_m < 0.0) {
      throw std::domain_error("indoor split distances must be non-negative");
    }
    if (std::abs(*d2d_out_m + *d2d_in_m - d2d_m) > 1e-9 * std::max(1.0, d2d_m)) {
      throw std::domain_error("d2d_out + d2d_in must equal d2d");
    }
  }
}

}  // namespace mmwprop
