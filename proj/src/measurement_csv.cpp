#include "mmwprop/measurement_csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "mmwprop/geometry.hpp"

namespace mmwprop {

CsvParseError::CsvParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_comma(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto pos = line.find(',');
    if (pos == std::string_view::npos) {
      fields.push_back(trim(line));
      return fields;
    }
    fields.push_back(trim(line.substr(0, pos)));
    line.remove_prefix(pos + 1);
  }
}

double parse_double(std::string_view field, std::size_t line, const char* what) {
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw CsvParseError(line, std::string("malformed ") + what + " value '" +
                                  std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<MeasurementRecord> read_measurement_csv(std::istream& in,
                                                    std::optional<double> h_bs_m,
                                                    std::optional<double> h_ue_m) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    throw CsvParseError(1, "empty input, expected the header 'fc_ghz,d_m,pl_db'");
  }
  ++line_no;
  const auto header = split_comma(line);
  bool has_kind = false;
  if (header.size() == 4 && header[3] == "d_kind") {
    has_kind = true;
  } else if (header.size() != 3) {
    throw CsvParseError(line_no, "expected header 'fc_ghz,d_m,pl_db[,d_kind]'");
  }
  if (header[0] != "fc_ghz" || header[1] != "d_m" || header[2] != "pl_db") {
    throw CsvParseError(line_no, "expected header 'fc_ghz,d_m,pl_db[,d_kind]'");
  }

  std::vector<MeasurementRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) {
      throw CsvParseError(line_no, "blank row");
    }
    const auto fields = split_comma(line);
    const std::size_t expected = has_kind ? 4 : 3;
    if (fields.size() != expected) {
      throw CsvParseError(line_no, "expected " + std::to_string(expected) +
                                       " fields, got " + std::to_string(fields.size()));
    }
    MeasurementRecord r;
    r.fc_ghz = parse_double(fields[0], line_no, "fc_ghz");
    r.d_m = parse_double(fields[1], line_no, "d_m");
    r.pl_db = parse_double(fields[2], line_no, "pl_db");
    if (has_kind && fields[3] == "2d") {
      if (!h_bs_m || !h_ue_m) {
        throw CsvParseError(line_no,
                            "2d distance needs antenna heights to derive the 3D distance");
      }
      r.d_m = derive_d3d(r.d_m, *h_bs_m, *h_ue_m);
    } else if (has_kind && fields[3] != "3d") {
      throw CsvParseError(line_no, "d_kind must be '2d' or '3d', got '" +
                                       std::string(fields[3]) + "'");
    }
    records.push_back(r);
  }
  return records;
}

std::vector<MeasurementRecord> read_measurement_csv_file(const std::string& path,
                                                         std::optional<double> h_bs_m,
                                                         std::optional<double> h_ue_m) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return read_measurement_csv(in, h_bs_m, h_ue_m);
}

}  // namespace mmwprop
