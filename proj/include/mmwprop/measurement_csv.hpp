#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmwprop/fitting.hpp"

namespace mmwprop {

/// Malformed measurement file; carries the 1-based line number.
class CsvParseError : public std::runtime_error {
 public:
  CsvParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the measurement format: header "fc_ghz,d_m,pl_db" with an optional
/// trailing "d_kind" column holding "2d" or "3d" per row. 2D distances are
/// converted to 3D with the given antenna heights; a 2D row without heights
/// is an error. Any malformed row is a hard error with its line number.
std::vector<MeasurementRecord> read_measurement_csv(
    std::istream& in, std::optional<double> h_bs_m = std::nullopt,
    std::optional<double> h_ue_m = std::nullopt);

std::vector<MeasurementRecord> read_measurement_csv_file(
    const std::string& path, std::optional<double> h_bs_m = std::nullopt,
    std::optional<double> h_ue_m = std::nullopt);

}  // namespace mmwprop
