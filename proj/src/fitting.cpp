#include "mmwprop/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

namespace mmwprop {

namespace {

void validate_records(std::span<const MeasurementRecord> records, std::size_t minimum) {
  if (records.size() < minimum) {
    throw std::invalid_argument("needs at least " + std::to_string(minimum) + " records");
  }
  for (const auto& r : records) {
    if (!(r.fc_ghz > 0.0) || !std::isfinite(r.fc_ghz)) {
      throw std::invalid_argument("record with non-positive frequency");
    }
    if (!(r.d_m >= 1.0)) {
      throw std::invalid_argument("record with distance below the 1 m reference");
    }
    if (!std::isfinite(r.pl_db)) {
      throw std::invalid_argument("record with non-finite path loss");
    }
  }
}

std::size_t count_distinct(std::span<const MeasurementRecord> records,
                           double MeasurementRecord::* field) {
  std::set<double> values;
  for (const auto& r : records) values.insert(r.*field);
  return values.size();
}

// Ordinary least squares on a small design matrix via normal equations and
// Gaussian elimination with partial pivoting.
std::vector<double> least_squares(const std::vector<std::vector<double>>& rows,
                                  const std::vector<double>& y, int k) {
  std::vector<double> ata(static_cast<std::size_t>(k) * k, 0.0);
  std::vector<double> aty(k, 0.0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int i = 0; i < k; ++i) {
      aty[i] += rows[r][i] * y[r];
      for (int j = i; j < k; ++j) {
        ata[static_cast<std::size_t>(i) * k + j] += rows[r][i] * rows[r][j];
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < i; ++j) {
      ata[static_cast<std::size_t>(i) * k + j] = ata[static_cast<std::size_t>(j) * k + i];
    }
  }

  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    for (int r = col + 1; r < k; ++r) {
      if (std::abs(ata[static_cast<std::size_t>(r) * k + col]) >
          std::abs(ata[static_cast<std::size_t>(pivot) * k + col])) {
        pivot = r;
      }
    }
    if (std::abs(ata[static_cast<std::size_t>(pivot) * k + col]) < 1e-12) {
      throw std::invalid_argument("rank-deficient design matrix");
    }
    if (pivot != col) {
      for (int j = 0; j < k; ++j) {
        std::swap(ata[static_cast<std::size_t>(col) * k + j],
                  ata[static_cast<std::size_t>(pivot) * k + j]);
      }
      std::swap(aty[col], aty[pivot]);
    }
    for (int r = col + 1; r < k; ++r) {
      const double f =
          ata[static_cast<std::size_t>(r) * k + col] / ata[static_cast<std::size_t>(col) * k + col];
      for (int j = col; j < k; ++j) {
        ata[static_cast<std::size_t>(r) * k + j] -= f * ata[static_cast<std::size_t>(col) * k + j];
      }
      aty[r] -= f * aty[col];
    }
  }
  std::vector<double> x(k, 0.0);
  for (int r = k - 1; r >= 0; --r) {
    double v = aty[r];
    for (int j = r + 1; j < k; ++j) {
      v -= ata[static_cast<std::size_t>(r) * k + j] * x[j];
    }
    x[r] = v / ata[static_cast<std::size_t>(r) * k + r];
  }
  return x;
}

FitResult finish(FittedParams params, std::span<const MeasurementRecord> records,
                 const std::function<double(const MeasurementRecord&)>& predict) {
  FitResult out;
  out.params = std::move(params);
  out.n_records = records.size();
  out.residuals.reserve(records.size());
  double sse = 0.0;
  for (const auto& r : records) {
    const double res = r.pl_db - predict(r);
    out.residuals.push_back(res);
    sse += res * res;
  }
  out.sigma_db = std::sqrt(sse / static_cast<double>(records.size()));
  return out;
}

double mean_frequency(std::span<const MeasurementRecord> records) {
  double sum = 0.0;
  for (const auto& r : records) sum += r.fc_ghz;
  return sum / static_cast<double>(records.size());
}

}  // namespace

FitResult fit_ci(std::span<const MeasurementRecord> records) {
  validate_records(records, 2);
  double num = 0.0, den = 0.0;
  for (const auto& r : records) {
    const double l = std::log10(r.d_m);
    num += (r.pl_db - fspl_1m(Frequency(r.fc_ghz))) * l;
    den += l * l;
  }
  if (den == 0.0) {
    throw std::invalid_argument(
        "all distances at the 1 m reference; the exponent is unidentifiable");
  }
  const CiParams p{num / den / 10.0};
  return finish(p, records, [&p](const MeasurementRecord& r) {
    return pl_ci(Frequency(r.fc_ghz), r.d_m, p);
  });
}

FitResult fit_cif(std::span<const MeasurementRecord> records, std::optional<double> f0_ghz) {
  validate_records(records, 2);
  const double f0 = f0_ghz.value_or(mean_frequency(records));
  if (!(f0 > 0.0)) {
    throw std::invalid_argument("anchor frequency must be positive");
  }

  if (count_distinct(records, &MeasurementRecord::fc_ghz) < 2) {
    // the frequency regressor vanishes: b is forced to 0 and the fit
    // reduces to the single-parameter form
    FitResult ci = fit_ci(records);
    const CifParams p{std::get<CiParams>(ci.params).n, 0.0, records[0].fc_ghz};
    ci.params = p;
    return ci;
  }

  std::vector<std::vector<double>> rows;
  std::vector<double> y;
  rows.reserve(records.size());
  y.reserve(records.size());
  for (const auto& r : records) {
    const double l = std::log10(r.d_m);
    const double phi = (r.fc_ghz - f0) / f0;
    rows.push_back({l, phi * l});
    y.push_back(r.pl_db - fspl_1m(Frequency(r.fc_ghz)));
  }
  const auto coeff = least_squares(rows, y, 2);
  if (coeff[0] == 0.0) {
    throw std::invalid_argument("fitted exponent is zero; b is unrecoverable");
  }
  const CifParams p{coeff[0] / 10.0, coeff[1] / coeff[0], f0};
  return finish(p, records, [&p](const MeasurementRecord& r) {
    return pl_cif(Frequency(r.fc_ghz), r.d_m, p);
  });
}

FitResult fit_abg(std::span<const MeasurementRecord> records) {
  validate_records(records, 3);
  if (count_distinct(records, &MeasurementRecord::fc_ghz) < 2) {
    throw std::invalid_argument(
        "single-frequency data: gamma is unidentifiable (collinear with the offset)");
  }
  if (count_distinct(records, &MeasurementRecord::d_m) < 2) {
    throw std::invalid_argument("needs at least 2 distinct distances");
  }

  std::vector<std::vector<double>> rows;
  std::vector<double> y;
  rows.reserve(records.size());
  y.reserve(records.size());
  for (const auto& r : records) {
    rows.push_back({10.0 * std::log10(r.d_m), 1.0, 10.0 * std::log10(r.fc_ghz)});
    y.push_back(r.pl_db);
  }
  const auto coeff = least_squares(rows, y, 3);
  const AbgParams p{coeff[0], coeff[1], coeff[2]};
  return finish(p, records, [&p](const MeasurementRecord& r) {
    return pl_abg(Frequency(r.fc_ghz), r.d_m, p);
  });
}

namespace {

FitResult fit_dual_cif_at(std::span<const MeasurementRecord> records, double dbp,
                          double f0, bool multi_frequency) {
  std::vector<std::vector<double>> rows;
  std::vector<double> y;
  rows.reserve(records.size());
  y.reserve(records.size());
  const double lbp = std::log10(dbp);
  for (const auto& r : records) {
    const double phi = (r.fc_ghz - f0) / f0;
    const double l1 = r.d_m <= dbp ? std::log10(r.d_m) : lbp;
    const double l2 = r.d_m <= dbp ? 0.0 : std::log10(r.d_m / dbp);
    if (multi_frequency) {
      rows.push_back({l1, phi * l1, l2, phi * l2});
    } else {
      rows.push_back({l1, l2});
    }
    y.push_back(r.pl_db - fspl_1m(Frequency(r.fc_ghz)));
  }
  const auto coeff = least_squares(rows, y, multi_frequency ? 4 : 2);

  DualCifParams p{};
  p.f0_ghz = f0;
  p.dbp_m = dbp;
  if (multi_frequency) {
    if (coeff[0] == 0.0 || coeff[2] == 0.0) {
      throw std::invalid_argument("fitted slope is zero; b is unrecoverable");
    }
    p.n1 = coeff[0] / 10.0;
    p.b1 = coeff[1] / coeff[0];
    p.n2 = coeff[2] / 10.0;
    p.b2 = coeff[3] / coeff[2];
  } else {
    p.n1 = coeff[0] / 10.0;
    p.n2 = coeff[1] / 10.0;
  }
  return finish(p, records, [&p](const MeasurementRecord& r) {
    return pl_dual_slope(Frequency(r.fc_ghz), r.d_m, DualSlopeParams{p});
  });
}

FitResult fit_dual_abg_at(std::span<const MeasurementRecord> records, double dbp) {
  std::vector<std::vector<double>> rows;
  std::vector<double> y;
  rows.reserve(records.size());
  y.reserve(records.size());
  const double lbp = std::log10(dbp);
  for (const auto& r : records) {
    const double l1 = r.d_m <= dbp ? std::log10(r.d_m) : lbp;
    const double l2 = r.d_m <= dbp ? 0.0 : std::log10(r.d_m / dbp);
    rows.push_back({10.0 * l1, 1.0, 10.0 * std::log10(r.fc_ghz), 10.0 * l2});
    y.push_back(r.pl_db);
  }
  const auto coeff = least_squares(rows, y, 4);
  const DualAbgParams p{coeff[0], coeff[1], coeff[2], coeff[3], dbp};
  return finish(p, records, [&p](const MeasurementRecord& r) {
    return pl_dual_slope(Frequency(r.fc_ghz), r.d_m, DualSlopeParams{p});
  });
}

double sse_of(const FitResult& fit) {
  double sse = 0.0;
  for (const double r : fit.residuals) sse += r * r;
  return sse;
}

}  // namespace

FitResult fit_dual_slope(std::span<const MeasurementRecord> records,
                         DualSlopeFamily family,
                         std::span<const double> dbp_candidates_m) {
  validate_records(records, 6);
  if (dbp_candidates_m.empty()) {
    throw std::invalid_argument("needs at least one breakpoint candidate");
  }
  const bool multi_frequency = count_distinct(records, &MeasurementRecord::fc_ghz) >= 2;
  if (family == DualSlopeFamily::ABG && !multi_frequency) {
    throw std::invalid_argument(
        "single-frequency data: gamma is unidentifiable (collinear with the offset)");
  }
  const double f0 = mean_frequency(records);

  std::optional<FitResult> best;
  double best_sse = std::numeric_limits<double>::infinity();
  for (const double dbp : dbp_candidates_m) {
    if (!(dbp > 1.0)) {
      throw std::invalid_argument("breakpoint candidates must exceed the 1 m reference");
    }
    const auto below = std::count_if(records.begin(), records.end(),
                                     [dbp](const auto& r) { return r.d_m <= dbp; });
    if (below == 0 || below == static_cast<long>(records.size())) {
      continue;  // no data on one side of this candidate
    }
    FitResult fit = family == DualSlopeFamily::CIF
                        ? fit_dual_cif_at(records, dbp, f0, multi_frequency)
                        : fit_dual_abg_at(records, dbp);
    const double sse = sse_of(fit);
    if (sse < best_sse) {
      best_sse = sse;
      best = std::move(fit);
    }
  }
  if (!best) {
    throw std::invalid_argument("no breakpoint candidate has records on both sides");
  }
  return *std::move(best);
}

double ci_abg_sigma_ratio(std::span<const MeasurementRecord> records) {
  const double sigma_abg = fit_abg(records).sigma_db;
  const double sigma_ci = fit_ci(records).sigma_db;
  return sigma_ci / sigma_abg;
}

}  // namespace mmwprop
