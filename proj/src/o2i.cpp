#include "mmwprop/o2i.hpp"

#include <cmath>
#include <stdexcept>

namespace mmwprop {

namespace {

struct MaterialCoefficients {
  double a_db;
  double b_db_per_ghz;
};

MaterialCoefficients coefficients(Material m) {
  switch (m) {
    case Material::StandardGlass:
      return {2.0, 0.2};
    case Material::IrrGlass:
      return {23.0, 0.3};
    case Material::Concrete:
      return {5.0, 4.0};
    case Material::Wood:
      return {4.85, 0.12};
  }
  throw std::logic_error("unknown material");
}

}  // namespace

double material_loss(Material m, Frequency fc) {
  const auto c = coefficients(m);
  return c.a_db + c.b_db_per_ghz * fc.ghz();
}

void WallComposition::validate() const {
  if (parts.empty()) {
    throw std::domain_error("wall composition is empty");
  }
  double total = 0.0;
  for (const auto& [material, proportion] : parts) {
    if (proportion < 0.0) {
      throw std::domain_error("material proportions must be non-negative");
    }
    total += proportion;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::domain_error("material proportions must sum to 1");
  }
}

double wall_loss(const WallComposition& wall, Frequency fc, double pl_npi_db) {
  wall.validate();
  double sum = 0.0;
  for (const auto& [material, proportion] : wall.parts) {
    sum += proportion * std::pow(10.0, -material_loss(material, fc) / 10.0);
  }
  return pl_npi_db - 10.0 * std::log10(sum);
}

O2IModelParams o2i_default_params(O2IVariant v) {
  O2IModelParams p;
  switch (v) {
    case O2IVariant::Tr38901Low:
      p.indoor_slope_db_per_m = 0.5;
      p.sigma_db = 4.4;
      break;
    case O2IVariant::Tr38901High:
      p.indoor_slope_db_per_m = 0.5;
      p.sigma_db = 6.5;
      break;
    case O2IVariant::FiveGcmLow:
      // indoor loss is not specified for these rows; defaults to none
      p.bpl_a = 5.0;
      p.bpl_b = 0.03;
      p.sigma_db = 4.0;
      break;
    case O2IVariant::FiveGcmHigh:
      p.bpl_a = 10.0;
      p.bpl_b = 5.0;
      p.sigma_db = 6.0;
      break;
    case O2IVariant::MmMagic:
      p.o2i_b = 8.5;
      p.o2i_c = 11.2;
      p.sigma_db = 5.7;
      p.sigma_slope = 2.3;
      break;
    case O2IVariant::Car:
      p.car_mu_db = 9.0;
      p.sigma_db = 5.0;
      break;
    case O2IVariant::CarMetalized:
      p.car_mu_db = 20.0;
      p.sigma_db = 5.0;
      break;
  }
  return p;
}

O2IResult o2i_total(double pl_basic_db, O2IVariant v, Frequency fc, double d2d_in_m) {
  return o2i_total(pl_basic_db, v, fc, d2d_in_m, o2i_default_params(v));
}

O2IResult o2i_total(double pl_basic_db, O2IVariant v, Frequency fc, double d2d_in_m,
                    const O2IModelParams& params) {
  if (d2d_in_m < 0.0) {
    throw std::domain_error("indoor depth must be non-negative");
  }

  double through_wall = 0.0;
  switch (v) {
    case O2IVariant::Tr38901Low: {
      const WallComposition wall{{{Material::StandardGlass, 0.3}, {Material::Concrete, 0.7}}};
      through_wall = wall_loss(wall, fc, params.pl_npi_db);
      break;
    }
    case O2IVariant::Tr38901High: {
      const WallComposition wall{{{Material::IrrGlass, 0.7}, {Material::Concrete, 0.3}}};
      through_wall = wall_loss(wall, fc, params.pl_npi_db);
      break;
    }
    case O2IVariant::FiveGcmLow:
    case O2IVariant::FiveGcmHigh:
      through_wall = 10.0 * std::log10(params.bpl_a + params.bpl_b * fc.ghz() * fc.ghz());
      break;
    case O2IVariant::MmMagic:
      through_wall = params.o2i_b + params.o2i_c * std::log10(fc.ghz());
      break;
    case O2IVariant::Car:
    case O2IVariant::CarMetalized:
      through_wall = params.car_mu_db;
      break;
  }

  const double mean = pl_basic_db + through_wall + params.indoor_slope_db_per_m * d2d_in_m;
  const double sigma = params.sigma_db + params.sigma_slope * std::log10(fc.ghz());
  return {mean, sigma};
}

O2IResult car_penetration(double pl_basic_db, bool metalized) {
  return {pl_basic_db + (metalized ? 20.0 : 9.0), 5.0};
}

}  // namespace mmwprop
