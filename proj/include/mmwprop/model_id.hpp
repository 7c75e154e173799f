#pragma once

#include <string>
#include <string_view>

namespace mmwprop {

enum class Org {
  TR38901,      // 3GPP TR 38.901
  FiveGCM,      // 5GCM white paper
  METIS,
  MmMagic,
  IturM2135,    // ITU-R M.2135
  NYU,
  Ieee80211ad,
};

enum class Scenario {
  UMiStreetCanyon,
  UMiOpenSquare,
  UMa,
  InHMixedOffice,
  InHOpenOffice,
  InHShoppingMall,
  RMa,
};

enum class Visibility { Los, Nlos, O2I };

/// Model-family tag. Distinguishes multiple registered models of one
/// (org, scenario, visibility) cell, e.g. the CI option next to the default
/// ABG form of a NLOS row.
enum class Family {
  // path loss parameterizations
  CI,
  CIF,
  CIH,
  ABG,
  DualCIF,
  DualABG,
  Breakpoint,       // PL1/PL2 LOS composites with a breakpoint distance
  NineCoefficient,  // the street-width/building-height NLOS form
  IturRmaLos,
  AB,               // bare A*log10(d)+B rows (plus a 20log10(fc) term where printed)
  ABStaSta,         // 802.11ad NLOS station-to-station row (d2d based)
  ABStaAp,          // 802.11ad NLOS station-to-AP row (d3d based)
  // LOS probability forms
  D1D2,
  NYUSquared,
  InHPiecewise,
  RMaExponential,
};

/// Key into the model registry.
struct ModelId {
  Org org;
  Scenario scenario;
  Visibility visibility;
  Family family;

  bool operator==(const ModelId&) const = default;
};

std::string_view to_string(Org);
std::string_view to_string(Scenario);
std::string_view to_string(Visibility);
std::string_view to_string(Family);

Org parse_org(std::string_view);
Scenario parse_scenario(std::string_view);
Visibility parse_visibility(std::string_view);
Family parse_family(std::string_view);

/// Canonical "org:scenario:visibility:family" form, e.g.
/// "tr38901:umi-street:los:bp". Used in CSV headers and on the CLI.
std::string to_string(const ModelId&);

}  // namespace mmwprop
