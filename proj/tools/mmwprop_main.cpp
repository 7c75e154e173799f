#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mmwprop/consistency_map.hpp"
#include "mmwprop/fitting.hpp"
#include "mmwprop/los_probability.hpp"
#include "mmwprop/measurement_csv.hpp"
#include "mmwprop/o2i.hpp"
#include "mmwprop/path_loss.hpp"
#include "mmwprop/registry.hpp"
#include "mmwprop/shadowing.hpp"

using namespace mmwprop;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// Flag-resolution problems (unknown models, malformed lists) exit 2; model
// domain errors during evaluation exit 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string csv_num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct GeometryFlags {
  std::optional<double> d2d, d3d;
  std::optional<double> h_bs, h_ue;
  std::optional<double> d_out, d_in;

  LinkGeometry resolve(Scenario scenario, double distance,
                       DistanceKind kind) const {
    const auto defaults = default_heights(scenario);
    const double hb = h_bs.value_or(defaults.h_bs_m);
    const double hu = h_ue.value_or(defaults.h_ue_m);
    LinkGeometry g = kind == DistanceKind::D2D ? LinkGeometry::from_d2d(distance, hb, hu)
                                               : LinkGeometry::from_d3d(distance, hb, hu);
    if (d_out || d_in) {
      if (!d_out || !d_in) {
        throw UsageError("both --dout and --din are needed for an indoor split");
      }
      g = g.with_indoor_split(*d_out, *d_in);
    }
    return g;
  }
};

struct EnvFlags {
  std::optional<double> street_w, building_h;

  std::optional<EnvironmentConstants> resolve() const {
    if (!street_w && !building_h) return std::nullopt;
    EnvironmentConstants env;
    if (street_w) env.street_width_m = *street_w;
    if (building_h) env.building_height_m = *building_h;
    return env;
  }
};

int report_violations(const std::vector<Violation>& violations, bool strict) {
  for (const auto& v : violations) {
    std::cerr << (strict ? "error: " : "warning: ") << v.message << "\n";
  }
  return violations.empty() || !strict ? kExitOk : kExitDomain;
}

O2IVariant parse_o2i_variant(const std::string& name) {
  if (name == "tr38901-low") return O2IVariant::Tr38901Low;
  if (name == "tr38901-high") return O2IVariant::Tr38901High;
  if (name == "5gcm-low") return O2IVariant::FiveGcmLow;
  if (name == "5gcm-high") return O2IVariant::FiveGcmHigh;
  if (name == "mmmagic") return O2IVariant::MmMagic;
  if (name == "car") return O2IVariant::Car;
  if (name == "car-metal") return O2IVariant::CarMetalized;
  throw UsageError("unknown o2i variant '" + name + "'");
}

std::vector<double> sweep_grid(double lo, double hi, int count, bool log_spacing) {
  if (count < 2) throw UsageError("--count must be at least 2");
  if (!(hi > lo)) throw UsageError("--dmax must exceed --dmin");
  if (log_spacing && lo <= 0.0) throw UsageError("log spacing needs a positive --dmin");
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    out.push_back(log_spacing ? std::pow(10.0, std::log10(lo) + t * (std::log10(hi) - std::log10(lo)))
                              : lo + t * (hi - lo));
  }
  return out;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  return file;
}

// ------------------------------------------------------------- subcommands

struct PathlossArgs {
  std::string org, scenario, vis, family;
  double fc = 0.0;
  GeometryFlags geom;
  EnvFlags env;
  bool strict = false;
};

int run_pathloss(const PathlossArgs& a) {
  ModelId model;
  try {
    std::optional<Family> family;
    if (!a.family.empty()) family = parse_family(a.family);
    model = Registry::instance().resolve_path_loss(
        parse_org(a.org), parse_scenario(a.scenario), parse_visibility(a.vis), family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }

  if (!a.geom.d2d && !a.geom.d3d) throw UsageError("one of --d2d or --d3d is needed");
  if (a.geom.d2d && a.geom.d3d) throw UsageError("give only one of --d2d or --d3d");
  const Frequency fc{a.fc};
  const LinkGeometry geom =
      a.geom.resolve(model.scenario, a.geom.d2d ? *a.geom.d2d : *a.geom.d3d,
                     a.geom.d2d ? DistanceKind::D2D : DistanceKind::D3D);
  const auto env = a.env.resolve();

  const auto violations = check_applicability(model, fc, geom, env);
  if (report_violations(violations, a.strict) != kExitOk) return kExitDomain;

  const auto& entry = Registry::instance().path_loss(model);
  const double mean = mean_path_loss(model, fc, geom, env);
  std::cout << "model: " << to_string(model) << "\n";
  std::cout << "mean_db: " << fmt6(mean) << "\n";
  std::cout << "sigma_db: " << fmt6(entry.sigma_sf_db) << "\n";
  return kExitOk;
}

struct SweepArgs {
  std::string models;
  double fc = 0.0;
  double dmin = 10.0, dmax = 500.0;
  int count = 50;
  std::string spacing = "linear";
  std::string dist = "2d";
  GeometryFlags geom;
  EnvFlags env;
  std::string out;
  bool strict = false;
};

int run_sweep(const SweepArgs& a) {
  const auto names = split_list(a.models);
  if (names.empty()) throw UsageError("--models must name at least one model");
  std::vector<ModelId> models;
  for (const auto& name : names) {
    try {
      models.push_back(Registry::instance().parse_path_loss_id(name));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  const DistanceKind kind = a.dist == "3d" ? DistanceKind::D3D : DistanceKind::D2D;
  const Frequency fc{a.fc};
  const auto env = a.env.resolve();
  const auto grid = sweep_grid(a.dmin, a.dmax, a.count, a.spacing == "log");

  bool any_violation = false;
  std::ofstream file;
  std::ostream& out = open_output(a.out, file);
  out << "d_m";
  for (const auto& m : models) out << "," << to_string(m);
  out << "\n";
  for (const double d : grid) {
    out << csv_num(d);
    for (const auto& m : models) {
      const LinkGeometry geom = a.geom.resolve(m.scenario, d, kind);
      if (!check_applicability(m, fc, geom, env).empty()) any_violation = true;
      out << "," << csv_num(mean_path_loss(m, fc, geom, env));
    }
    out << "\n";
  }
  if (any_violation) {
    std::cerr << (a.strict ? "error" : "warning")
              << ": sweep leaves the validated range of at least one model\n";
    if (a.strict) return kExitDomain;
  }
  return kExitOk;
}

struct LosprobArgs {
  std::string models;
  double dmin = 0.0, dmax = 1000.0;
  int count = 201;
  std::string spacing = "linear";
  GeometryFlags geom;
  std::string out;
};

int run_losprob(const LosprobArgs& a) {
  const auto names = split_list(a.models);
  if (names.empty()) throw UsageError("--models must name at least one model");
  std::vector<ModelId> models;
  for (const auto& name : names) {
    try {
      models.push_back(Registry::instance().parse_los_prob_id(name));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  const auto grid = sweep_grid(a.dmin, a.dmax, a.count, a.spacing == "log");

  std::ofstream file;
  std::ostream& out = open_output(a.out, file);
  out << "d_m";
  for (const auto& m : models) out << "," << to_string(m);
  out << "\n";
  for (const double d : grid) {
    out << csv_num(d);
    for (const auto& m : models) {
      const LinkGeometry geom = a.geom.resolve(m.scenario, d, DistanceKind::D2D);
      out << "," << csv_num(los_probability(m, geom));
    }
    out << "\n";
  }
  return kExitOk;
}

struct LosprobCompareArgs {
  std::string models;
  std::string ref;
  GeometryFlags geom;
};

int run_losprob_compare(const LosprobCompareArgs& a) {
  const auto names = split_list(a.models);
  if (names.empty()) throw UsageError("--models must name at least one model");
  std::vector<ModelId> models;
  for (const auto& name : names) {
    try {
      models.push_back(Registry::instance().parse_los_prob_id(name));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }

  std::ifstream in(a.ref);
  if (!in) throw UsageError("cannot open reference '" + a.ref + "'");
  std::vector<std::pair<double, double>> reference;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) continue;  // header
    double d = 0.0, p = 0.0;
    if (std::sscanf(line.c_str(), "%lf,%lf", &d, &p) != 2) {
      throw UsageError("malformed reference row at line " + std::to_string(line_no));
    }
    reference.emplace_back(d, p);
  }
  if (reference.empty()) throw UsageError("reference file has no data rows");

  for (const auto& m : models) {
    double sse = 0.0;
    for (const auto& [d, p_ref] : reference) {
      const LinkGeometry geom = a.geom.resolve(m.scenario, d, DistanceKind::D2D);
      const double p = los_probability(m, geom);
      sse += (p - p_ref) * (p - p_ref);
    }
    std::cout << to_string(m) << " mse: " << fmt6(sse / reference.size()) << "\n";
  }
  return kExitOk;
}

struct O2iArgs {
  std::string variant;
  double fc = 0.0;
  double plb = 0.0;
  double din = 0.0;
  std::optional<double> npi;
  std::optional<double> indoor_slope;
  bool strict = false;
};

int run_o2i(const O2iArgs& a) {
  const O2IVariant variant = parse_o2i_variant(a.variant);
  const Frequency fc{a.fc};
  if (variant == O2IVariant::CarMetalized && (fc.ghz() < 0.6 || fc.ghz() > 60.0)) {
    std::cerr << (a.strict ? "error" : "warning")
              << ": the metalized-car offset is specified for 0.6-60 GHz\n";
    if (a.strict) return kExitDomain;
  }
  O2IModelParams params = o2i_default_params(variant);
  if (a.npi) params.pl_npi_db = *a.npi;
  if (a.indoor_slope) params.indoor_slope_db_per_m = *a.indoor_slope;
  const auto result = o2i_total(a.plb, variant, fc, a.din, params);
  std::cout << "mean_db: " << fmt6(result.mean_db) << "\n";
  std::cout << "sigma_db: " << fmt6(result.sigma_db) << "\n";
  return kExitOk;
}

struct FitArgs {
  std::string family;
  std::string input;
  std::optional<double> f0;
  std::string dbp_candidates;
  GeometryFlags geom;
};

int run_fit(const FitArgs& a) {
  std::ifstream in(a.input);
  if (!in) throw UsageError("cannot open input '" + a.input + "'");
  const auto records = read_measurement_csv(in, a.geom.h_bs, a.geom.h_ue);

  FitResult fit;
  std::optional<double> sigma_ratio;
  if (a.family == "ci") {
    fit = fit_ci(records);
  } else if (a.family == "cif") {
    fit = fit_cif(records, a.f0);
  } else if (a.family == "abg") {
    fit = fit_abg(records);
    sigma_ratio = ci_abg_sigma_ratio(records);
  } else if (a.family == "dual-cif" || a.family == "dual-abg") {
    std::vector<double> candidates;
    for (const auto& item : split_list(a.dbp_candidates)) {
      try {
        candidates.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw UsageError("malformed breakpoint candidate '" + item + "'");
      }
    }
    if (candidates.empty()) {
      throw UsageError("--dbp-candidates must list at least one distance");
    }
    fit = fit_dual_slope(records,
                         a.family == "dual-cif" ? DualSlopeFamily::CIF : DualSlopeFamily::ABG,
                         candidates);
  } else {
    throw UsageError("unknown fit family '" + a.family + "'");
  }

  std::cout << "family: " << a.family << "\n";
  struct Print {
    void operator()(const CiParams& p) const { std::cout << "n: " << fmt6(p.n) << "\n"; }
    void operator()(const CifParams& p) const {
      std::cout << "n: " << fmt6(p.n) << "\n"
                << "b: " << fmt6(p.b) << "\n"
                << "f0_ghz: " << fmt6(p.f0_ghz) << "\n";
    }
    void operator()(const AbgParams& p) const {
      std::cout << "alpha: " << fmt6(p.alpha) << "\n"
                << "beta: " << fmt6(p.beta) << "\n"
                << "gamma: " << fmt6(p.gamma) << "\n";
    }
    void operator()(const DualCifParams& p) const {
      std::cout << "n1: " << fmt6(p.n1) << "\nb1: " << fmt6(p.b1) << "\n"
                << "n2: " << fmt6(p.n2) << "\nb2: " << fmt6(p.b2) << "\n"
                << "f0_ghz: " << fmt6(p.f0_ghz) << "\ndbp_m: " << fmt6(p.dbp_m) << "\n";
    }
    void operator()(const DualAbgParams& p) const {
      std::cout << "alpha1: " << fmt6(p.alpha1) << "\nbeta1: " << fmt6(p.beta1) << "\n"
                << "gamma: " << fmt6(p.gamma) << "\nalpha2: " << fmt6(p.alpha2) << "\n"
                << "dbp_m: " << fmt6(p.dbp_m) << "\n";
    }
  };
  std::visit(Print{}, fit.params);
  std::cout << "sigma_db: " << fmt6(fit.sigma_db) << "\n";
  std::cout << "n_records: " << fit.n_records << "\n";
  if (sigma_ratio) {
    std::cout << "sigma_ratio_ci_abg: " << fmt6(*sigma_ratio) << "\n";
  }
  return kExitOk;
}

struct MapArgs {
  std::string scenario;
  std::string org = "tr38901";
  std::string family;
  int size = 256;
  double cell = 2.0;
  std::optional<double> dcor;
  std::optional<double> sigma;
  std::uint64_t seed = 1;
  double hue = 1.5;
  double bs_x = 0.0, bs_y = 0.0;
  std::string out;
};

int run_map(const MapArgs& a) {
  ModelId losprob_model;
  Scenario scenario;
  try {
    scenario = parse_scenario(a.scenario);
    std::optional<Family> family;
    if (!a.family.empty()) family = parse_family(a.family);
    losprob_model = Registry::instance().resolve_los_prob(parse_org(a.org), scenario, family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }

  double sigma = 0.0;
  if (a.sigma) {
    sigma = *a.sigma;
  } else {
    // default: the shadow fading of the org's default NLOS path loss row
    try {
      const ModelId nlos = Registry::instance().resolve_path_loss(
          parse_org(a.org), scenario, Visibility::Nlos);
      sigma = Registry::instance().path_loss(nlos).sigma_sf_db;
    } catch (const std::out_of_range&) {
      throw UsageError("no default shadow fading for this scenario; give --sigma");
    }
  }

  GridSpec spec;
  spec.nx = a.size;
  spec.ny = a.size;
  spec.cell_m = a.cell;
  spec.corr_dist_m = a.dcor.value_or(default_correlation_distance_m(scenario));
  spec.origin_x_m = a.bs_x - a.size * a.cell / 2.0;
  spec.origin_y_m = a.bs_y - a.size * a.cell / 2.0;

  const auto grid =
      generate_consistency_map(losprob_model, a.hue, sigma, spec, a.bs_x, a.bs_y, a.seed);
  std::ofstream file;
  std::ostream& out = open_output(a.out, file);
  grid.write_csv(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Millimeter-wave propagation models: evaluation, comparison, fitting, maps"};
  app.require_subcommand(1);
  app.set_config("--config");

  PathlossArgs pathloss;
  auto* cmd_pathloss = app.add_subcommand("pathloss", "Evaluate one path loss model");
  cmd_pathloss->add_option("--org", pathloss.org)->required();
  cmd_pathloss->add_option("--scenario", pathloss.scenario)->required();
  cmd_pathloss->add_option("--vis", pathloss.vis)->required();
  cmd_pathloss->add_option("--family", pathloss.family);
  cmd_pathloss->add_option("--fc", pathloss.fc, "carrier frequency in GHz")->required();
  cmd_pathloss->add_option("--d2d", pathloss.geom.d2d);
  cmd_pathloss->add_option("--d3d", pathloss.geom.d3d);
  cmd_pathloss->add_option("--hbs", pathloss.geom.h_bs);
  cmd_pathloss->add_option("--hue", pathloss.geom.h_ue);
  cmd_pathloss->add_option("--dout", pathloss.geom.d_out);
  cmd_pathloss->add_option("--din", pathloss.geom.d_in);
  cmd_pathloss->add_option("--w", pathloss.env.street_w);
  cmd_pathloss->add_option("--h", pathloss.env.building_h);
  cmd_pathloss->add_flag("--strict", pathloss.strict);

  SweepArgs sweep;
  auto* cmd_sweep = app.add_subcommand("sweep", "Path loss curves over distance as CSV");
  cmd_sweep->add_option("--models", sweep.models, "comma-separated model ids")->required();
  cmd_sweep->add_option("--fc", sweep.fc)->required();
  cmd_sweep->add_option("--dmin", sweep.dmin);
  cmd_sweep->add_option("--dmax", sweep.dmax);
  cmd_sweep->add_option("--count", sweep.count);
  cmd_sweep->add_option("--spacing", sweep.spacing)->check(CLI::IsMember({"linear", "log"}));
  cmd_sweep->add_option("--dist", sweep.dist)->check(CLI::IsMember({"2d", "3d"}));
  cmd_sweep->add_option("--hbs", sweep.geom.h_bs);
  cmd_sweep->add_option("--hue", sweep.geom.h_ue);
  cmd_sweep->add_option("--w", sweep.env.street_w);
  cmd_sweep->add_option("--h", sweep.env.building_h);
  cmd_sweep->add_option("--out", sweep.out);
  cmd_sweep->add_flag("--strict", sweep.strict);

  LosprobArgs losprob;
  auto* cmd_losprob = app.add_subcommand("losprob", "LOS probability curves as CSV");
  cmd_losprob->add_option("--models", losprob.models)->required();
  cmd_losprob->add_option("--dmin", losprob.dmin);
  cmd_losprob->add_option("--dmax", losprob.dmax);
  cmd_losprob->add_option("--count", losprob.count);
  cmd_losprob->add_option("--spacing", losprob.spacing)
      ->check(CLI::IsMember({"linear", "log"}));
  cmd_losprob->add_option("--hbs", losprob.geom.h_bs);
  cmd_losprob->add_option("--hue", losprob.geom.h_ue);
  cmd_losprob->add_option("--out", losprob.out);

  LosprobCompareArgs compare;
  auto* cmd_compare =
      app.add_subcommand("losprob-compare", "Mean squared error against a reference curve");
  cmd_compare->add_option("--models", compare.models)->required();
  cmd_compare->add_option("--ref", compare.ref, "reference CSV of d,p rows")->required();
  cmd_compare->add_option("--hbs", compare.geom.h_bs);
  cmd_compare->add_option("--hue", compare.geom.h_ue);

  O2iArgs o2i;
  auto* cmd_o2i = app.add_subcommand("o2i", "Outdoor-to-indoor penetration loss");
  cmd_o2i->add_option("--variant", o2i.variant)->required();
  cmd_o2i->add_option("--fc", o2i.fc)->required();
  cmd_o2i->add_option("--plb", o2i.plb, "basic outdoor path loss in dB")->required();
  cmd_o2i->add_option("--din", o2i.din, "indoor depth in meters");
  cmd_o2i->add_option("--npi", o2i.npi, "non-perpendicular incidence offset in dB");
  cmd_o2i->add_option("--indoor-slope", o2i.indoor_slope, "indoor loss in dB per meter");
  cmd_o2i->add_flag("--strict", o2i.strict);

  FitArgs fit;
  auto* cmd_fit = app.add_subcommand("fit", "Least-squares model fit from a measurement CSV");
  cmd_fit->add_option("--family", fit.family)
      ->required()
      ->check(CLI::IsMember({"ci", "cif", "abg", "dual-cif", "dual-abg"}));
  cmd_fit->add_option("--input", fit.input)->required();
  cmd_fit->add_option("--f0", fit.f0, "CIF anchor frequency override in GHz");
  cmd_fit->add_option("--dbp-candidates", fit.dbp_candidates,
                      "comma-separated breakpoint candidates in meters");
  cmd_fit->add_option("--hbs", fit.geom.h_bs);
  cmd_fit->add_option("--hue", fit.geom.h_ue);

  MapArgs map;
  auto* cmd_map = app.add_subcommand("map", "Spatially consistent LOS/shadowing map as CSV");
  cmd_map->add_option("--scenario", map.scenario)->required();
  cmd_map->add_option("--org", map.org);
  cmd_map->add_option("--family", map.family);
  cmd_map->add_option("--size", map.size, "grid size in cells");
  cmd_map->add_option("--cell", map.cell, "cell size in meters");
  cmd_map->add_option("--dcor", map.dcor, "correlation distance in meters");
  cmd_map->add_option("--sigma", map.sigma, "shadow fading std in dB");
  cmd_map->add_option("--seed", map.seed);
  cmd_map->add_option("--hue", map.hue);
  cmd_map->add_option("--bs-x", map.bs_x);
  cmd_map->add_option("--bs-y", map.bs_y);
  cmd_map->add_option("--out", map.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_pathloss->parsed()) return run_pathloss(pathloss);
    if (cmd_sweep->parsed()) return run_sweep(sweep);
    if (cmd_losprob->parsed()) return run_losprob(losprob);
    if (cmd_compare->parsed()) return run_losprob_compare(compare);
    if (cmd_o2i->parsed()) return run_o2i(o2i);
    if (cmd_fit->parsed()) return run_fit(fit);
    if (cmd_map->parsed()) return run_map(map);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
