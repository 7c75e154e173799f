#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mmwprop/path_loss.hpp"
#include "mmwprop/registry.hpp"
#include "mmwprop/shadowing.hpp"

using namespace mmwprop;

namespace {

const Frequency f28{28.0};

}  // namespace

TEST_CASE("free space reference anchor") {
  CHECK(fspl_1m(Frequency(1.0)) == 32.4);
  CHECK(fspl_1m(Frequency(100.0)) == doctest::Approx(72.4).epsilon(1e-12));
  CHECK(fspl_1m(f28) == doctest::Approx(61.3431606268).epsilon(1e-10));
}

TEST_CASE("CI model") {
  CHECK(pl_ci(f28, 1.0, {2.1}) == fspl_1m(f28));
  CHECK(pl_ci(f28, 100.0, {2.1}) == doctest::Approx(103.343160627).epsilon(1e-10));
  CHECK(pl_ci(f28, 100.0, {3.17}) == doctest::Approx(124.743160627).epsilon(1e-10));
  CHECK_THROWS_AS(pl_ci(f28, 0.5, {2.1}), std::domain_error);
}

TEST_CASE("CI frequency shift identity") {
  RandomSource rng(41);
  for (int i = 0; i < 50; ++i) {
    const double f1 = 0.5 + 99.0 * rng.uniform();
    const double f2 = 0.5 + 99.0 * rng.uniform();
    const double d = 1.0 + 4000.0 * rng.uniform();
    const double n = 1.5 + 2.5 * rng.uniform();
    const double shift = pl_ci(Frequency(f2), d, {n}) - pl_ci(Frequency(f1), d, {n});
    CHECK(shift == doctest::Approx(20.0 * std::log10(f2 / f1)).epsilon(1e-12));
  }
}

TEST_CASE("CIF model and its CI reductions") {
  // office single-slope row evaluated at its own anchor
  CHECK(pl_cif(Frequency(24.2), 100.0, {3.19, 0.06, 24.2}) ==
        doctest::Approx(123.87630732).epsilon(1e-10));

  RandomSource rng(42);
  for (int i = 0; i < 100; ++i) {
    const double n = 1.5 + 2.5 * rng.uniform();
    const double b = -0.2 + 0.4 * rng.uniform();
    const double f0 = 1.0 + 80.0 * rng.uniform();
    const double d = 1.0 + 999.0 * rng.uniform();
    const double fc = 0.5 + 99.5 * rng.uniform();
    // b = 0 collapses to CI at any frequency; fc = f0 at any b
    CHECK(pl_cif(Frequency(fc), d, {n, 0.0, f0}) ==
          doctest::Approx(pl_ci(Frequency(fc), d, {n})).epsilon(1e-13));
    CHECK(pl_cif(Frequency(f0), d, {n, b, f0}) ==
          doctest::Approx(pl_ci(Frequency(f0), d, {n})).epsilon(1e-13));
  }
}

TEST_CASE("CIH model and its CI reduction") {
  const Frequency f73{73.0};
  CHECK(pl_cih(f73, 1.0, 35.0, {2.31, -0.03, 35.0}) ==
        doctest::Approx(69.666).epsilon(1e-5));
  CHECK(pl_cih(f73, 1000.0, 35.0, {3.07, -0.049, 35.0}) ==
        doctest::Approx(161.766457202).epsilon(1e-10));
  CHECK(pl_cih(f73, 1000.0, 35.0, {2.31, -0.03, 35.0}) ==
        doctest::Approx(138.966457202).epsilon(1e-10));
  CHECK_THROWS_AS(pl_cih(f73, 100.0, 9.0, {2.31, -0.03, 35.0}), std::domain_error);
  CHECK_THROWS_AS(pl_cih(f73, 100.0, 151.0, {2.31, -0.03, 35.0}), std::domain_error);

  RandomSource rng(43);
  for (int i = 0; i < 100; ++i) {
    const double n = 2.0 + 1.5 * rng.uniform();
    const double btx = -0.1 + 0.2 * rng.uniform();
    const double h0 = 20.0 + 60.0 * rng.uniform();
    const double d = 1.0 + 5000.0 * rng.uniform();
    const double fc = 0.5 + 99.5 * rng.uniform();
    CHECK(pl_cih(Frequency(fc), d, h0, {n, btx, h0}) ==
          doctest::Approx(pl_ci(Frequency(fc), d, {n})).epsilon(1e-13));
  }
}

TEST_CASE("ABG model") {
  CHECK(pl_abg(f28, 100.0, {3.53, 22.4, 2.13}) ==
        doctest::Approx(123.824466068).epsilon(1e-10));
  CHECK(pl_abg(f28, 100.0, {3.4, 19.2, 2.3}) ==
        doctest::Approx(120.484634721).epsilon(1e-10));
  CHECK(pl_abg(Frequency(1.0), 1.0, {3.53, 22.4, 2.13}) == doctest::Approx(22.4));
  CHECK_THROWS_AS(pl_abg(f28, 0.99, {3.53, 22.4, 2.13}), std::domain_error);
}

TEST_CASE("dual-slope values and continuity") {
  const DualCifParams mall{2.43, -0.01, 39.5, 8.36, 0.39, 110.0};
  CHECK(pl_dual_slope(Frequency(39.5), 50.0, DualSlopeParams{mall}) ==
        doctest::Approx(105.616913018).epsilon(1e-10));

  const DualCifParams office{2.51, 0.06, 24.1, 4.25, 0.04, 7.8};
  CHECK(pl_dual_slope(Frequency(24.1), 10.0, DualSlopeParams{office}) ==
        doctest::Approx(87.0178947647).epsilon(1e-10));

  RandomSource rng(44);
  for (int i = 0; i < 100; ++i) {
    const double fc = 6.0 + 90.0 * rng.uniform();
    const DualCifParams cif{1.5 + 2.0 * rng.uniform(), -0.1 + 0.2 * rng.uniform(),
                            10.0 + 50.0 * rng.uniform(), 2.0 + 7.0 * rng.uniform(),
                            -0.2 + 0.6 * rng.uniform(), 5.0 + 140.0 * rng.uniform()};
    const double lo = pl_dual_slope(Frequency(fc), cif.dbp_m * (1.0 - 1e-12),
                                    DualSlopeParams{cif});
    const double hi = pl_dual_slope(Frequency(fc), cif.dbp_m * (1.0 + 1e-12),
                                    DualSlopeParams{cif});
    CHECK(std::abs(hi - lo) < 1e-9);

    const DualAbgParams abg{1.0 + 2.0 * rng.uniform(), 10.0 + 30.0 * rng.uniform(),
                            1.5 + 1.5 * rng.uniform(), 2.0 + 9.0 * rng.uniform(),
                            5.0 + 140.0 * rng.uniform()};
    const double alo = pl_dual_slope(Frequency(fc), abg.dbp_m * (1.0 - 1e-12),
                                     DualSlopeParams{abg});
    const double ahi = pl_dual_slope(Frequency(fc), abg.dbp_m * (1.0 + 1e-12),
                                     DualSlopeParams{abg});
    CHECK(std::abs(ahi - alo) < 1e-9);
  }
}

TEST_CASE("breakpoint distances") {
  CHECK(breakpoint_tr38901(f28, 10.0, 1.5) == doctest::Approx(1680.0).epsilon(1e-12));
  CHECK(breakpoint_tr38901(f28, 4.0, 1.5) == doctest::Approx(560.0).epsilon(1e-12));
  CHECK(breakpoint_tr38901(f28, 4.0, 1.5) > 500.0);
  CHECK(breakpoint_tr38901(Frequency(1.0), 2.0, 2.0) ==
        doctest::Approx(13.3333333333).epsilon(1e-10));
  CHECK_THROWS_AS(breakpoint_tr38901(f28, 1.0, 1.5), std::domain_error);

  CHECK(breakpoint_metis(f28, 10.0, 1.5) == doctest::Approx(157.730839641).epsilon(1e-10));
  CHECK(breakpoint_metis(Frequency(1.0), 10.0, 1.5) == doctest::Approx(52.2).epsilon(1e-10));
  CHECK(breakpoint_metis(Frequency(5.0), 10.0, 1.5) ==
        doctest::Approx(89.0485689226).epsilon(1e-10));

  CHECK(breakpoint_itur(Frequency(9.1), 35.0, 1.5) ==
        doctest::Approx(10005.9726017).epsilon(1e-10));
  CHECK(breakpoint_itur(Frequency(24.0), 35.0, 1.5) ==
        doctest::Approx(26389.3782902).epsilon(1e-10));
}

TEST_CASE("urban breakpoint LOS composites") {
  const auto uma = LinkGeometry::from_d3d(100.0, 25.0, 1.5);
  CHECK(pl_tr38901_uma_los(f28, uma) == doctest::Approx(100.943160627).epsilon(1e-10));

  const auto umi = LinkGeometry::from_d3d(100.0, 10.0, 1.5);
  CHECK(pl_tr38901_umi_los(f28, umi) == doctest::Approx(103.343160627).epsilon(1e-10));

  // identical to the CI n=2.1 form below the breakpoint
  for (double d2d = 10.0; d2d <= 1600.0; d2d += 31.0) {
    const auto g = LinkGeometry::from_d2d(d2d, 10.0, 1.5);
    CHECK(pl_tr38901_umi_los(f28, g) ==
          doctest::Approx(pl_ci(f28, g.d3d_m, {2.1})).epsilon(1e-13));
  }

  // the printed correction term anchors PL2 at PL1 exactly
  CHECK(tr38901_breakpoint_mismatch(f28, 10.0, 1.5, Scenario::UMiStreetCanyon) < 1e-9);
  CHECK(tr38901_breakpoint_mismatch(f28, 25.0, 1.5, Scenario::UMa) < 1e-9);
  CHECK(tr38901_breakpoint_mismatch(f28, 10.0, 1.5, Scenario::UMiStreetCanyon) < 0.35);

  // post-breakpoint branch engages past the breakpoint
  const auto far_umi = LinkGeometry::from_d2d(2000.0, 10.0, 1.5);
  CHECK(pl_tr38901_umi_los(f28, far_umi) > pl_ci(f28, far_umi.d3d_m, {2.1}));
}

TEST_CASE("max-lower-bounded NLOS rows") {
  const auto uma = LinkGeometry::from_d3d(100.0, 25.0, 1.5);
  const ModelId uma_nlos{Org::TR38901, Scenario::UMa, Visibility::Nlos, Family::ABG};
  CHECK(mean_path_loss(uma_nlos, f28, uma) == doctest::Approx(120.643160627).epsilon(1e-10));

  const auto umi = LinkGeometry::from_d3d(100.0, 10.0, 1.5);
  const ModelId umi_nlos{Org::TR38901, Scenario::UMiStreetCanyon, Visibility::Nlos,
                         Family::ABG};
  CHECK(mean_path_loss(umi_nlos, f28, umi) == doctest::Approx(123.824466068).epsilon(1e-10));

  // the max keeps NLOS at or above LOS everywhere
  const ModelId uma_los{Org::TR38901, Scenario::UMa, Visibility::Los, Family::Breakpoint};
  for (double d2d = 10.0; d2d <= 5000.0; d2d *= 1.7) {
    const auto g = LinkGeometry::from_d2d(d2d, 25.0, 1.5);
    CHECK(mean_path_loss(uma_nlos, f28, g) >= mean_path_loss(uma_los, f28, g));
  }
}

TEST_CASE("METIS urban microcell composites") {
  const Frequency f5{5.0};
  CHECK(metis_pl0(f28) == doctest::Approx(1.34292191675).epsilon(1e-10));
  CHECK(pl_metis_umi_los(f5, 50.0, 10.0, 1.5) ==
        doctest::Approx(81.7321615761).epsilon(1e-10));
  CHECK(pl_metis_umi_nlos(f5, 50.0, 10.0, 1.5) ==
        doctest::Approx(103.225419272).epsilon(1e-10));

  // linear UE height term: -0.3 dB per meter of UE height on the raw form
  const double at_1_5 = pl_metis_umi_nlos(f5, 500.0, 10.0, 1.5);
  const double at_22_5 = pl_metis_umi_nlos(f5, 500.0, 10.0, 22.5);
  CHECK(at_1_5 - at_22_5 == doctest::Approx(0.3 * 21.0).epsilon(1e-9));

  // continuity of the LOS branches at the breakpoint
  const double dbp = breakpoint_metis(f5, 10.0, 1.5);
  CHECK(pl_metis_umi_los(f5, dbp, 10.0, 1.5) ==
        doctest::Approx(pl_metis_umi_los(f5, dbp * (1.0 + 1e-12), 10.0, 1.5)).epsilon(1e-12));
}

TEST_CASE("METIS urban macrocell NLOS") {
  const Frequency f5{5.0};
  const auto g = LinkGeometry::from_d3d(1000.0, 25.0, 1.5);
  const EnvironmentConstants env{20.0, 20.0};
  CHECK(pl_metis_uma_nlos(f5, g, env) == doctest::Approx(144.782336014).epsilon(1e-10));

  // registry dispatch uses the same default constants
  const ModelId id{Org::METIS, Scenario::UMa, Visibility::Nlos, Family::NineCoefficient};
  CHECK(mean_path_loss(id, f5, g) == doctest::Approx(144.782336014).epsilon(1e-10));
}

TEST_CASE("rural macrocell per ITU-R") {
  const Frequency f24{24.0};
  const EnvironmentConstants env{20.0, 5.0};
  CHECK(pl_itur_rma_los(f24, 500.0, env, 35.0, 1.5) ==
        doctest::Approx(115.313302006).epsilon(1e-10));
  CHECK(pl_itur_rma_nlos(f24, 1000.0, env, 35.0, 1.5) ==
        doctest::Approx(147.137760597).epsilon(1e-10));

  // above 9.1 GHz the breakpoint exceeds the 10 km applicability limit, so
  // the second branch can never engage
  CHECK(breakpoint_itur(Frequency(9.1), 35.0, 1.5) > 10000.0);

  // positive distance slope
  CHECK(pl_itur_rma_nlos(f24, 2000.0, env, 35.0, 1.5) >
        pl_itur_rma_nlos(f24, 1000.0, env, 35.0, 1.5));

  // the UE term vanishes where 3.2 log10(11.75 h)^2 == 4.97
  const double h_zero = std::pow(10.0, std::sqrt(4.97 / 3.2)) / 11.75;
  const double at_zero = pl_itur_rma_nlos(f24, 1000.0, env, 35.0, h_zero);
  const double with_term = 161.04 - 7.1 * std::log10(20.0) + 7.5 * std::log10(5.0) -
                           (24.37 - 3.7 * (5.0 / 35.0) * (5.0 / 35.0)) * std::log10(35.0) +
                           (43.42 - 3.1 * std::log10(35.0)) * (std::log10(1000.0) - 3.0) +
                           20.0 * std::log10(24.0);
  CHECK(at_zero == doctest::Approx(with_term).epsilon(1e-12));
}

TEST_CASE("60 GHz WLAN indoor rows") {
  const Frequency f60{60.0};
  CHECK(pl_80211ad(f60, 10.0, Ieee80211adLink::StaSta, Visibility::Los) ==
        doctest::Approx(88.0630250077).epsilon(1e-10));
  CHECK(pl_80211ad(f60, 1.0, Ieee80211adLink::StaSta, Visibility::Los) ==
        doctest::Approx(68.0630250077).epsilon(1e-10));
  CHECK(pl_80211ad(f60, 10.0, Ieee80211adLink::StaSta, Visibility::Nlos) ==
        doctest::Approx(93.0630250077).epsilon(1e-10));
  CHECK(pl_80211ad(f60, 10.0, Ieee80211adLink::StaAp, Visibility::Nlos) ==
        doctest::Approx(95.0630250077).epsilon(1e-10));
}

TEST_CASE("registry dispatch covers the plain table rows") {
  const auto& reg = Registry::instance();

  const auto open_sq = LinkGeometry::from_d3d(100.0, 10.0, 1.5);
  CHECK(mean_path_loss({Org::FiveGCM, Scenario::UMiOpenSquare, Visibility::Los, Family::CI},
                       f28, open_sq) == doctest::Approx(98.3431606268).epsilon(1e-10));

  const auto inh = LinkGeometry::from_d3d(50.0, 3.0, 1.5);
  CHECK(mean_path_loss({Org::TR38901, Scenario::InHMixedOffice, Visibility::Los, Family::CI},
                       f28, inh) == doctest::Approx(90.7353417019).epsilon(1e-10));

  const auto mall = LinkGeometry::from_d2d(10.0, 2.0, 2.0);
  CHECK(mean_path_loss({Org::METIS, Scenario::InHShoppingMall, Visibility::Los, Family::AB},
                       Frequency(63.0), mall) == doctest::Approx(87.2).epsilon(1e-10));

  CHECK(mean_path_loss({Org::MmMagic, Scenario::UMiStreetCanyon, Visibility::Los, Family::ABG},
                       f28, open_sq) == doctest::Approx(101.400887052).epsilon(1e-10));

  CHECK(mean_path_loss({Org::MmMagic, Scenario::InHMixedOffice, Visibility::Los, Family::ABG},
                       f28, inh) == doctest::Approx(86.4230940961).epsilon(1e-10));

  // mmMAGIC indoor NLOS is lower-bounded by its LOS curve
  CHECK(mean_path_loss({Org::MmMagic, Scenario::InHMixedOffice, Visibility::Nlos, Family::ABG},
                       f28, inh) == doctest::Approx(116.6758284).epsilon(1e-9));

  // the 802.11ad NLOS rows are distinct registered models
  const auto wlan = LinkGeometry::from_d2d(10.0, 1.5, 1.5);
  CHECK(mean_path_loss({Org::Ieee80211ad, Scenario::InHMixedOffice, Visibility::Nlos,
                        Family::ABStaSta},
                       Frequency(60.0), wlan) ==
        doctest::Approx(93.0630250077).epsilon(1e-10));

  CHECK_THROWS_AS(
      mean_path_loss({Org::NYU, Scenario::UMa, Visibility::Los, Family::CI}, f28, open_sq),
      std::out_of_range);

  // free-function and dispatcher agree on the rural rows
  const auto rma = LinkGeometry::from_d3d(500.0, 35.0, 1.5);
  CHECK(mean_path_loss(reg.resolve_path_loss(Org::IturM2135, Scenario::RMa, Visibility::Los),
                       Frequency(24.0), rma) ==
        doctest::Approx(115.313302006).epsilon(1e-10));
}

TEST_CASE("CIH registry rows") {
  const Frequency f73{73.0};
  const auto g = LinkGeometry::from_d3d(1000.0, 35.0, 1.5);
  CHECK(mean_path_loss({Org::NYU, Scenario::RMa, Visibility::Los, Family::CIH}, f73, g) ==
        doctest::Approx(138.966457202).epsilon(1e-10));
  CHECK(mean_path_loss({Org::NYU, Scenario::RMa, Visibility::Nlos, Family::CIH}, f73, g) ==
        doctest::Approx(161.766457202).epsilon(1e-10));
}
