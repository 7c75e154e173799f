#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mmwprop/path_loss.hpp"

namespace mmwprop {

/// One measured point. Distances are 3D; 2D inputs are converted at
/// ingestion (see measurement_csv.hpp).
struct MeasurementRecord {
  double fc_ghz;
  double d_m;
  double pl_db;
};

using FittedParams =
    std::variant<CiParams, CifParams, AbgParams, DualCifParams, DualAbgParams>;

struct FitResult {
  FittedParams params;
  double sigma_db = 0.0;  // RMS residual, the shadow-fading estimate
  std::vector<double> residuals;
  std::size_t n_records = 0;
};

/// Closed-form least squares for the CI exponent:
///   n = sum((pl - fspl_1m(fc)) log10 d) / sum(log10^2 d).
/// Throws std::invalid_argument for fewer than 2 records or when every
/// distance sits at the 1 m reference (exponent unidentifiable).
FitResult fit_ci(std::span<const MeasurementRecord> records);

/// Two-parameter least squares with the anchor f0 fixed at the
/// record-count-weighted mean frequency (or the given override).
/// Single-frequency data forces b = 0 and reduces to fit_ci.
FitResult fit_cif(std::span<const MeasurementRecord> records,
                  std::optional<double> f0_ghz = std::nullopt);

/// Ordinary least squares on [10 log10 d, 1, 10 log10 fc]. Requires at
/// least 2 distinct distances and 2 distinct frequencies; single-frequency
/// input throws naming gamma as unidentifiable.
FitResult fit_abg(std::span<const MeasurementRecord> records);

enum class DualSlopeFamily { CIF, ABG };

/// Constrained least squares (continuous at the breakpoint) per candidate
/// breakpoint; returns the candidate minimizing the SSE. Candidates with no
/// data on one side are skipped; if none remain, throws.
FitResult fit_dual_slope(std::span<const MeasurementRecord> records,
                         DualSlopeFamily family,
                         std::span<const double> dbp_candidates_m);

/// sigma_CI / sigma_ABG on the same records, the shadowing-variance
/// reduction diagnostic (>= 1 by nesting).
double ci_abg_sigma_ratio(std::span<const MeasurementRecord> records);

}  // namespace mmwprop
