#include "mmwprop/model_id.hpp"

#include <stdexcept>

namespace mmwprop {

namespace {

template <typename E>
struct NamePair {
  E value;
  std::string_view name;
};

constexpr NamePair<Org> kOrgs[] = {
    {Org::TR38901, "tr38901"},   {Org::FiveGCM, "5gcm"},
    {Org::METIS, "metis"},       {Org::MmMagic, "mmmagic"},
    {Org::IturM2135, "itur"},    {Org::NYU, "nyu"},
    {Org::Ieee80211ad, "80211ad"},
};

constexpr NamePair<Scenario> kScenarios[] = {
    {Scenario::UMiStreetCanyon, "umi-street"},
    {Scenario::UMiOpenSquare, "umi-open"},
    {Scenario::UMa, "uma"},
    {Scenario::InHMixedOffice, "inh-office"},
    {Scenario::InHOpenOffice, "inh-open-office"},
    {Scenario::InHShoppingMall, "inh-mall"},
    {Scenario::RMa, "rma"},
};

constexpr NamePair<Visibility> kVisibilities[] = {
    {Visibility::Los, "los"},
    {Visibility::Nlos, "nlos"},
    {Visibility::O2I, "o2i"},
};

constexpr NamePair<Family> kFamilies[] = {
    {Family::CI, "ci"},
    {Family::CIF, "cif"},
    {Family::CIH, "cih"},
    {Family::ABG, "abg"},
    {Family::DualCIF, "dual-cif"},
    {Family::DualABG, "dual-abg"},
    {Family::Breakpoint, "bp"},
    {Family::NineCoefficient, "ninecoeff"},
    {Family::IturRmaLos, "itur-los"},
    {Family::AB, "ab"},
    {Family::ABStaSta, "ab-sta-sta"},
    {Family::ABStaAp, "ab-sta-ap"},
    {Family::D1D2, "d1d2"},
    {Family::NYUSquared, "nyu-squared"},
    {Family::InHPiecewise, "inh"},
    {Family::RMaExponential, "rma-exp"},
};

template <typename E, std::size_t N>
std::string_view name_of(const NamePair<E> (&table)[N], E value) {
  for (const auto& row : table) {
    if (row.value == value) return row.name;
  }
  throw std::logic_error("unnamed enum value");
}

template <typename E, std::size_t N>
E value_of(const NamePair<E> (&table)[N], std::string_view name, const char* what) {
  for (const auto& row : table) {
    if (row.name == name) return row.value;
  }
  throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

}  // namespace

std::string_view to_string(Org v) { return name_of(kOrgs, v); }
std::string_view to_string(Scenario v) { return name_of(kScenarios, v); }
std::string_view to_string(Visibility v) { return name_of(kVisibilities, v); }
std::string_view to_string(Family v) { return name_of(kFamilies, v); }

Org parse_org(std::string_view s) { return value_of(kOrgs, s, "org"); }
Scenario parse_scenario(std::string_view s) { return value_of(kScenarios, s, "scenario"); }
Visibility parse_visibility(std::string_view s) { return value_of(kVisibilities, s, "visibility"); }
Family parse_family(std::string_view s) { return value_of(kFamilies, s, "family"); }

std::string to_string(const ModelId& id) {
  std::string out;
  out += to_string(id.org);
  out += ':';
  out += to_string(id.scenario);
  out += ':';
  out += to_string(id.visibility);
  out += ':';
  out += to_string(id.family);
  return out;
}

}  // namespace mmwprop
