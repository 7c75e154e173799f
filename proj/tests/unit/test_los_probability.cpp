#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mmwprop/los_probability.hpp"
#include "mmwprop/registry.hpp"

using namespace mmwprop;

namespace {

LinkGeometry umi_geom(double d2d) { return LinkGeometry::from_d2d(d2d, 10.0, 1.5); }

}  // namespace

TEST_CASE("d1/d2 form") {
  const D1D2Params tr_umi{18.0, 36.0};
  CHECK(los_prob_d1d2(10.0, tr_umi) == 1.0);
  CHECK(los_prob_d1d2(18.0, tr_umi) == 1.0);
  CHECK(los_prob_d1d2(36.0, tr_umi) == doctest::Approx(0.683939720586).epsilon(1e-10));
  CHECK(los_prob_d1d2(0.0, tr_umi) == 1.0);

  const D1D2Params nyu_umi{22.0, 100.0, true};
  CHECK(los_prob_d1d2(100.0, nyu_umi) == doctest::Approx(0.256994210531).epsilon(1e-10));
}

TEST_CASE("d1/d2 is 1 up to d1 and strictly decreasing beyond") {
  const D1D2Params p{20.0, 39.0};
  for (double d = 0.0; d <= 20.0; d += 0.25) {
    CHECK(los_prob_d1d2(d, p) == 1.0);
  }
  double prev = 1.0;
  for (double d = 20.5; d <= 2000.0; d += 0.5) {
    const double v = los_prob_d1d2(d, p);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("squared variant never exceeds the base form") {
  const D1D2Params base{20.0, 39.0};
  D1D2Params squared = base;
  squared.squared = true;
  for (double d = 0.0; d <= 5000.0; d += 11.0) {
    const double pb = los_prob_d1d2(d, base);
    const double ps = los_prob_d1d2(d, squared);
    CHECK(ps <= pb + 1e-15);
    if (pb < 1.0) CHECK(ps < pb);
  }
}

TEST_CASE("UMa height correction") {
  CHECK(uma_height_correction(100.0, 1.5) == 0.0);
  CHECK(uma_height_correction(100.0, 12.9) == 0.0);
  CHECK(uma_height_correction(10.0, 23.0) == 0.0);  // below the 18 m knee
  CHECK(uma_height_correction(100.0, 23.0) == doctest::Approx(0.641771398791).epsilon(1e-10));
  CHECK_THROWS_AS(uma_height_correction(100.0, 23.5), std::domain_error);
}

TEST_CASE("UMa form values") {
  const D1D2Params tr_uma{18.0, 63.0};
  CHECK(los_prob_uma(100.0, 1.5, tr_uma) == doctest::Approx(0.347670836844).epsilon(1e-10));
  CHECK(los_prob_uma(100.0, 23.0, tr_uma) == doctest::Approx(0.570796036125).epsilon(1e-10));
  CHECK(los_prob_uma(10.0, 1.5, tr_uma) == 1.0);
}

TEST_CASE("UMa at low UE heights matches the plain d1/d2 form") {
  const D1D2Params p{18.0, 63.0};
  for (double d = 0.0; d <= 3000.0; d += 13.0) {
    for (double h : {1.5, 5.0, 12.9}) {
      CHECK(los_prob_uma(d, h, p) == los_prob_d1d2(d, p));
    }
  }
}

TEST_CASE("UMa raw product can exceed 1 and the clamp holds it") {
  // inside d1 but past the 18 m correction knee: the base is 1 and the
  // correction lifts the product above it
  const D1D2Params p{20.0, 66.0};
  const double raw = los_prob_uma_raw(20.0, 23.0, p);
  CHECK(raw > 1.0);
  CHECK(los_prob_uma(20.0, 23.0, p) == 1.0);
}

TEST_CASE("indoor piecewise forms") {
  const auto mixed = InHPiecewiseParams::mixed_office();
  CHECK(los_prob_inh(1.0, mixed) == 1.0);
  CHECK(los_prob_inh(1.2, mixed) == 1.0);
  CHECK(los_prob_inh(10.0, mixed) == doctest::Approx(0.28742415956).epsilon(1e-10));
  // the printed branches step down at the outer boundary
  CHECK(los_prob_inh(6.5, mixed) == doctest::Approx(0.32).epsilon(1e-12));
  CHECK(los_prob_inh(6.5 - 1e-9, mixed) ==
        doctest::Approx(std::exp(-(6.5 - 1.2) / 4.7)).epsilon(1e-9));

  const auto open = InHPiecewiseParams::open_office();
  CHECK(los_prob_inh(5.0, open) == 1.0);
  CHECK(los_prob_inh(49.0, open) == doctest::Approx(0.54).epsilon(1e-12));
  CHECK(los_prob_inh(20.0, open) == doctest::Approx(std::exp(-15.0 / 70.8)).epsilon(1e-12));
}

TEST_CASE("rural exponential form") {
  CHECK(los_prob_rma(0.0) == 1.0);
  CHECK(los_prob_rma(10.0) == 1.0);
  CHECK(los_prob_rma(1010.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  // continuous at the 10 m knee
  CHECK(los_prob_rma(10.0 + 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("dispatcher routes to the registered entries") {
  const auto& reg = Registry::instance();
  const ModelId tr_umi = reg.resolve_los_prob(Org::TR38901, Scenario::UMiStreetCanyon);
  CHECK(los_probability(tr_umi, umi_geom(36.0)) ==
        doctest::Approx(0.683939720586).epsilon(1e-10));

  const ModelId gcm_umi = reg.resolve_los_prob(Org::FiveGCM, Scenario::UMiStreetCanyon);
  CHECK(los_probability(gcm_umi, umi_geom(20.0)) == 1.0);

  const ModelId metis_uma = reg.resolve_los_prob(Org::METIS, Scenario::UMa);
  CHECK(los_probability(metis_uma, LinkGeometry::from_d2d(100.0, 25.0, 1.5)) ==
        doctest::Approx(0.347670836844).epsilon(1e-10));

  const ModelId unknown{Org::MmMagic, Scenario::UMa, Visibility::Los, Family::D1D2};
  CHECK_THROWS_AS(los_probability(unknown, umi_geom(50.0)), std::out_of_range);
}

TEST_CASE("indoor-user rule substitutes the outdoor distance") {
  const auto& reg = Registry::instance();
  const ModelId tr_umi = reg.resolve_los_prob(Org::TR38901, Scenario::UMiStreetCanyon);
  const auto g = umi_geom(50.0).with_indoor_split(36.0, 14.0);
  CHECK(los_probability(tr_umi, g) == doctest::Approx(0.683939720586).epsilon(1e-10));

  // 5GCM prints no indoor rule; the full d2d stays in effect
  const ModelId gcm = reg.resolve_los_prob(Org::FiveGCM, Scenario::UMiStreetCanyon);
  CHECK(los_probability(gcm, g) ==
        los_probability(gcm, umi_geom(50.0)));
}

TEST_CASE("all registered models stay within [0,1] over a wide distance grid") {
  const auto& reg = Registry::instance();
  for (const auto& entry : reg.all_los_prob()) {
    const auto heights = default_heights(entry.id.scenario);
    for (double d : {0.0, 1e-6, 0.5, 1.0}) {
      const double p =
          los_probability(entry.id, LinkGeometry::from_d2d(d, heights.h_bs_m, heights.h_ue_m));
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
    }
    for (double logd = 0.0; logd <= 5.0; logd += 0.01) {
      const double d = std::pow(10.0, logd);
      const double p =
          los_probability(entry.id, LinkGeometry::from_d2d(d, heights.h_bs_m, heights.h_ue_m));
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
    }
  }
}

TEST_CASE("NYU squared is the most conservative urban-macro curve at range") {
  const D1D2Params nyu{20.0, 160.0, true};
  const D1D2Params tr{18.0, 63.0};
  const D1D2Params gcm{20.0, 66.0};
  // the three curves cross just above 200 m; beyond that the squared model
  // stays strictly lowest out to 1 km
  for (double d = 201.0; d <= 1000.0; d += 1.0) {
    const double p_nyu = los_prob_uma(d, 1.5, nyu);
    CHECK(p_nyu < los_prob_uma(d, 1.5, tr));
    CHECK(p_nyu < los_prob_uma(d, 1.5, gcm));
  }
  for (double d = 0.0; d <= 18.0; d += 0.5) {
    CHECK(los_prob_uma(d, 1.5, nyu) == 1.0);
    CHECK(los_prob_uma(d, 1.5, tr) == 1.0);
    CHECK(los_prob_uma(d, 1.5, gcm) == 1.0);
  }
}
