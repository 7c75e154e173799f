#include "mmwprop/consistency_map.hpp"

#include <fftw3.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "mmwprop/los_probability.hpp"
#include "mmwprop/registry.hpp"
#include "mmwprop/shadowing.hpp"

namespace mmwprop {

void GridSpec::validate() const {
  if (nx <= 0 || ny <= 0) {
    throw std::domain_error("grid must have positive dimensions");
  }
  if (!(cell_m > 0.0)) {
    throw std::domain_error("cell size must be positive");
  }
  if (!(corr_dist_m > 0.0)) {
    throw std::domain_error("correlation distance must be positive");
  }
  if (cell_m > corr_dist_m / 2.0) {
    throw std::domain_error("cell size must not exceed half the correlation distance");
  }
}

namespace {

// FFTW planning is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  fftw_complex* data = nullptr;
  explicit FftwBuffer(std::size_t n) {
    data = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    if (!data) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

struct FftwPlan {
  fftw_plan plan{};
  FftwPlan(int ny, int nx, fftw_complex* in, fftw_complex* out, int sign) {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_2d(ny, nx, in, out, sign, FFTW_ESTIMATE);
    if (!plan) throw std::runtime_error("fftw plan creation failed");
  }
  ~FftwPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  FftwPlan(const FftwPlan&) = delete;
  FftwPlan& operator=(const FftwPlan&) = delete;
};

// Filters an i.i.d. standard-normal field to the exponential autocorrelation
// exp(-lag/corr_dist) by shaping its spectrum: the target circulant
// covariance is transformed, clipped to non-negative, and its square root
// applied to the white field's spectrum. The result is renormalized to an
// exactly unit-variance marginal.
std::vector<double> filter_exponential(const std::vector<double>& white, int nx, int ny,
                                       double cell_m, double corr_dist_m) {
  const std::size_t n = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  FftwBuffer cov(n), spectrum(n), field(n);

  // circulant (torus) covariance so the embedding is exact
  for (int j = 0; j < ny; ++j) {
    const int wy = std::min(j, ny - j);
    for (int i = 0; i < nx; ++i) {
      const int wx = std::min(i, nx - i);
      const double lag = std::hypot(wx * cell_m, wy * cell_m);
      cov.data[static_cast<std::size_t>(j) * nx + i][0] = std::exp(-lag / corr_dist_m);
      cov.data[static_cast<std::size_t>(j) * nx + i][1] = 0.0;
    }
  }
  FftwPlan cov_plan(ny, nx, cov.data, spectrum.data, FFTW_FORWARD);
  fftw_execute(cov_plan.plan);

  double spectrum_mean = 0.0;
  std::vector<double> amplitude(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = std::max(spectrum.data[k][0], 0.0);
    amplitude[k] = std::sqrt(s);
    spectrum_mean += s;
  }
  spectrum_mean /= static_cast<double>(n);

  for (std::size_t k = 0; k < n; ++k) {
    field.data[k][0] = white[k];
    field.data[k][1] = 0.0;
  }
  FftwPlan fwd(ny, nx, field.data, field.data, FFTW_FORWARD);
  fftw_execute(fwd.plan);
  for (std::size_t k = 0; k < n; ++k) {
    field.data[k][0] *= amplitude[k];
    field.data[k][1] *= amplitude[k];
  }
  FftwPlan inv(ny, nx, field.data, field.data, FFTW_BACKWARD);
  fftw_execute(inv.plan);

  // one 1/N for the unnormalized transform pair, then the variance fix
  const double scale = 1.0 / (static_cast<double>(n) * std::sqrt(spectrum_mean));
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = field.data[k][0] * scale;
  }
  return out;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace

int SpatialGrid::cell_index_x(double x_m) const {
  return static_cast<int>(std::floor((x_m - spec_.origin_x_m) / spec_.cell_m));
}

int SpatialGrid::cell_index_y(double y_m) const {
  return static_cast<int>(std::floor((y_m - spec_.origin_y_m) / spec_.cell_m));
}

bool SpatialGrid::in_extent(double x_m, double y_m) const {
  const int ix = cell_index_x(x_m);
  const int iy = cell_index_y(y_m);
  return ix >= 0 && ix < spec_.nx && iy >= 0 && iy < spec_.ny;
}

bool SpatialGrid::los_cell(int ix, int iy) const {
  return los_[static_cast<std::size_t>(iy) * spec_.nx + ix] != 0;
}

double SpatialGrid::shadow_cell_db(int ix, int iy) const {
  return shadow_db_[static_cast<std::size_t>(iy) * spec_.nx + ix];
}

bool SpatialGrid::los_at(double x_m, double y_m) const {
  if (!in_extent(x_m, y_m)) {
    throw std::domain_error("query point outside the map extent");
  }
  return los_cell(cell_index_x(x_m), cell_index_y(y_m));
}

double SpatialGrid::shadow_at(double x_m, double y_m) const {
  if (!in_extent(x_m, y_m)) {
    throw std::domain_error("query point outside the map extent");
  }
  // bilinear between cell centers, clamped in the outer half-cell border
  const double fx = (x_m - spec_.origin_x_m) / spec_.cell_m - 0.5;
  const double fy = (y_m - spec_.origin_y_m) / spec_.cell_m - 0.5;
  const int ix0 = std::clamp(static_cast<int>(std::floor(fx)), 0, spec_.nx - 1);
  const int iy0 = std::clamp(static_cast<int>(std::floor(fy)), 0, spec_.ny - 1);
  const int ix1 = std::min(ix0 + 1, spec_.nx - 1);
  const int iy1 = std::min(iy0 + 1, spec_.ny - 1);
  const double tx = std::clamp(fx - ix0, 0.0, 1.0);
  const double ty = std::clamp(fy - iy0, 0.0, 1.0);
  const double top = shadow_cell_db(ix0, iy1) * (1.0 - tx) + shadow_cell_db(ix1, iy1) * tx;
  const double bottom =
      shadow_cell_db(ix0, iy0) * (1.0 - tx) + shadow_cell_db(ix1, iy0) * tx;
  return bottom * (1.0 - ty) + top * ty;
}

namespace {

void append_double(std::string& line, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  line.append(buf, res.ptr);
}

}  // namespace

void SpatialGrid::write_csv(std::ostream& out) const {
  out << "x_m,y_m,los,shadow_db\n";
  std::string line;
  for (int iy = 0; iy < spec_.ny; ++iy) {
    const double y = spec_.origin_y_m + (iy + 0.5) * spec_.cell_m;
    for (int ix = 0; ix < spec_.nx; ++ix) {
      const double x = spec_.origin_x_m + (ix + 0.5) * spec_.cell_m;
      line.clear();
      append_double(line, x);
      line.push_back(',');
      append_double(line, y);
      line.push_back(',');
      line.push_back(los_cell(ix, iy) ? '1' : '0');
      line.push_back(',');
      append_double(line, shadow_cell_db(ix, iy));
      line.push_back('\n');
      out << line;
    }
  }
}

SpatialGrid generate_consistency_map(const std::function<double(double)>& p_los_of_d2d,
                                     double shadow_sigma_db, const GridSpec& spec,
                                     double bs_x_m, double bs_y_m, std::uint64_t seed) {
  spec.validate();
  if (shadow_sigma_db < 0.0) {
    throw std::domain_error("shadow fading sigma must be non-negative");
  }

  const std::size_t n = static_cast<std::size_t>(spec.nx) * static_cast<std::size_t>(spec.ny);
  RandomSource rng(seed);
  std::vector<double> white_los(n), white_shadow(n);
  for (auto& v : white_los) v = rng.normal();
  for (auto& v : white_shadow) v = rng.normal();

  const auto los_field =
      filter_exponential(white_los, spec.nx, spec.ny, spec.cell_m, spec.corr_dist_m);
  const auto shadow_field =
      filter_exponential(white_shadow, spec.nx, spec.ny, spec.cell_m, spec.corr_dist_m);

  SpatialGrid grid;
  grid.spec_ = spec;
  grid.seed_ = seed;
  grid.bs_x_m_ = bs_x_m;
  grid.bs_y_m_ = bs_y_m;
  grid.los_.resize(n);
  grid.shadow_db_.resize(n);

  for (int iy = 0; iy < spec.ny; ++iy) {
    const double y = spec.origin_y_m + (iy + 0.5) * spec.cell_m;
    for (int ix = 0; ix < spec.nx; ++ix) {
      const double x = spec.origin_x_m + (ix + 0.5) * spec.cell_m;
      const std::size_t k = static_cast<std::size_t>(iy) * spec.nx + ix;
      const double d2d = std::hypot(x - bs_x_m, y - bs_y_m);
      // Gaussian copula: the filtered field keeps a standard-normal
      // marginal, so thresholding its CDF below P_LOS(d) reproduces the
      // marginal LOS probability exactly.
      grid.los_[k] = normal_cdf(los_field[k]) < p_los_of_d2d(d2d) ? 1 : 0;
      grid.shadow_db_[k] = shadow_sigma_db * shadow_field[k];
    }
  }
  return grid;
}

SpatialGrid generate_consistency_map(const ModelId& losprob_model, double h_ue_m,
                                     double shadow_sigma_db, const GridSpec& spec,
                                     double bs_x_m, double bs_y_m, std::uint64_t seed) {
  const LosProbEntry& entry = Registry::instance().los_prob(losprob_model);
  const double h_bs = default_heights(entry.id.scenario).h_bs_m;
  const ModelId model = entry.id;
  const auto p_los = [model, h_bs, h_ue_m](double d2d) {
    return los_probability(model, LinkGeometry::from_d2d(d2d, h_bs, h_ue_m));
  };
  return generate_consistency_map(p_los, shadow_sigma_db, spec, bs_x_m, bs_y_m, seed);
}

}  // namespace mmwprop
