// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "risgroup/mc.hpp"
#include "risgroup/rate.hpp"

using namespace risgroup;

namespace
{

// Reference operating point: 360 elements, 900-symbol frames, 0 dBm against
// a -80 dBm noise floor, link gains frozen from the deployment geometry.
SystemParams reference_params(int group_size)
{
  SystemParams params;
  params.surface_elements = 360;
  params.group_size = group_size;
  params.frame_symbols = 900;
  params.pilot_power_dbm = 0.0;
  params.data_power_dbm = 0.0;
  params.noise_dbm = -80.0;
  params.beta_direct = 1.3051356996654952e-09;
  params.beta_cascaded = 2.957442403809186e-08;
  params.snr_linear = 1e8;
  return params;
}

SystemParams unit_gain_params(int elements, int group_size, int frame_symbols)
{
  SystemParams params;
  params.surface_elements = elements;
  params.group_size = group_size;
  params.frame_symbols = frame_symbols;
  params.beta_direct = 1.0;
  params.beta_cascaded = 1.0;
  params.snr_linear = 1.0;
  return params;
}

}  // namespace

TEST_SUITE("rate")
{
  TEST_CASE("mean grouped amplitude hits the closed-form anchors")
  {
    CHECK(mean_grouped_amplitude(1)
          == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-14));
    CHECK(mean_grouped_amplitude(2)
          == doctest::Approx(3.0 * std::numbers::pi / 8.0).epsilon(1e-14));
    CHECK(mean_grouped_amplitude(100)
          == doctest::Approx(8.851198384821998).epsilon(1e-12));
    // Scaling law the optimizer leans on: roughly sqrt(B) for moderate B.
    CHECK(mean_grouped_amplitude(64) / 8.0
          == doctest::Approx(0.88).epsilon(0.01));
  }

  TEST_CASE("bound coefficients at the unit-gain single-element anchor")
  {
    BoundCoefficients coefficients = bound_coefficients(1, 1.0, 1.0);
    // z = pi/4, so the quadratic term is pi^2/16 and the linear term is
    // (1 - pi^2/16) + sqrt(pi) * pi/4.
    CHECK(coefficients.mean_amplitude
          == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-14));
    CHECK(coefficients.quadratic
          == doctest::Approx(0.6168502750680849).epsilon(1e-12));
    CHECK(coefficients.linear
          == doctest::Approx(1.7752317241398416).epsilon(1e-12));
  }

  TEST_CASE("bound coefficients degrade gracefully as the direct path vanishes")
  {
    BoundCoefficients coefficients = bound_coefficients(3, 1e-300, 2.0);
    double z = mean_grouped_amplitude(3);
    CHECK(coefficients.quadratic == doctest::Approx(2.0 * z * z).epsilon(1e-12));
    CHECK(coefficients.linear
          == doctest::Approx(2.0 * (3.0 - z * z)).epsilon(1e-6));
    CHECK_THROWS_AS(bound_coefficients(0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bound_coefficients(2, 0.0, 1.0), std::invalid_argument);
  }

  TEST_CASE("sampled mean received power matches the bound polynomial")
  {
    const int group_size = 2;
    const int subgroups = 8;
    const long draws = 100000;
    BoundCoefficients coefficients = bound_coefficients(group_size, 1.0, 1.0);
    auto summary = run_deterministic_mc(
        draws, 4,
        [&](long index)
        {
          TrialRng rng(211, static_cast<std::uint64_t>(index));
          ChannelRealization realization
              = sample_channels(subgroups * group_size, rng);
          realization.grouped
              = group_cascade(realization.cascaded, group_size);
          double coherent = std::abs(realization.direct);
          for (const auto& value : realization.grouped)
            coherent += std::abs(value);
          return coherent * coherent;
        });
    double expected = coefficients.quadratic * subgroups * subgroups
                      + coefficients.linear * subgroups + 1.0;
    CHECK(std::abs(summary.mean - expected) <= 3.0 * summary.stderr_mean);
  }

  TEST_CASE("upper bound anchors and edge cases")
  {
    SystemParams params = reference_params(5);
    CHECK(rate_upper_bound(params)
          == doctest::Approx(14.533365847582484).epsilon(1e-9));

    SUBCASE("whole surface as one group")
    {
      SystemParams whole = reference_params(360);
      BoundCoefficients coefficients
          = bound_coefficients(360, whole.beta_direct, whole.beta_cascaded);
      double expected
          = (1.0 - 2.0 / 900.0)
            * std::log2(1.0
                        + whole.snr_linear
                              * (coefficients.quadratic + coefficients.linear
                                 + whole.beta_direct));
      CHECK(rate_upper_bound(whole) == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("vanishing SNR sends the bound to zero")
    {
      SystemParams quiet = reference_params(5);
      quiet.snr_linear = 1e-300;
      CHECK(rate_upper_bound(quiet) < 1e-10);
    }
    SUBCASE("frames shorter than the pilot phase are rejected")
    {
      SystemParams cramped = reference_params(1);
      cramped.frame_symbols = 361;  // exactly all pilots, no data
      CHECK_THROWS_AS(rate_upper_bound(cramped), std::invalid_argument);
      cramped.frame_symbols = 200;
      CHECK_THROWS_AS(rate_upper_bound(cramped), std::invalid_argument);
    }
  }

  TEST_CASE("instantaneous SNR expansions")
  {
    SystemParams params = unit_gain_params(4, 2, 1000);
    params.snr_linear = 3.0;

    ChannelRealization realization;
    realization.direct = {1.0, 1.0};
    realization.cascaded = {{1.0, 0.0}, {0.0, 1.0}, {2.0, 0.0}, {0.0, -2.0}};
    realization.grouped = group_cascade(realization.cascaded, 2);

    SUBCASE("explicit coefficient expansion")
    {
      PhaseConfig config{PhaseMode::grouped,
                         {{0.0, 1.0}, {1.0, 0.0}}};  // arbitrary unit phases
      std::complex<double> expected_combined
          = realization.direct
            + config.coefficients[0] * realization.grouped[0]
            + config.coefficients[1] * realization.grouped[1];
      CHECK(instantaneous_snr(realization, config, params)
            == doctest::Approx(3.0 * std::norm(expected_combined)).epsilon(1e-12));
    }
    SUBCASE("no reflected gain leaves the direct term")
    {
      SystemParams direct_only = params;
      direct_only.beta_cascaded = 0.0;
      PhaseConfig config = optimal_phases(realization.direct, realization.grouped);
      CHECK(instantaneous_snr(realization, config, direct_only)
            == doctest::Approx(3.0 * std::norm(realization.direct)).epsilon(1e-12));
    }
    SUBCASE("no direct path leaves the aligned reflected sum")
    {
      ChannelRealization no_direct = realization;
      no_direct.direct = {0.0, 0.0};
      PhaseConfig config = optimal_phases({1.0, 0.0}, no_direct.grouped);
      double coherent = 0.0;
      for (const auto& value : no_direct.grouped)
        coherent += std::abs(value);
      CHECK(instantaneous_snr(no_direct, config, params)
            == doctest::Approx(3.0 * coherent * coherent).epsilon(1e-12));
    }
    SUBCASE("dimension mismatches are rejected")
    {
      PhaseConfig short_config{PhaseMode::grouped, {{1.0, 0.0}}};
      CHECK_THROWS_AS(instantaneous_snr(realization, short_config, params),
                      std::invalid_argument);
      PhaseConfig long_onoff{PhaseMode::onoff,
                             std::vector<std::complex<double>>(5, {1.0, 0.0})};
      CHECK_THROWS_AS(instantaneous_snr(realization, long_onoff, params),
                      std::invalid_argument);
    }
  }

  TEST_CASE("achievable rate at the reference point stays under the bound")
  {
    SystemParams params = reference_params(5);
    RateResult result = mc_achievable_rate(params, 10000, 1234, 4);
    CHECK(result.prefactor == doctest::Approx(1.0 - 73.0 / 900.0));
    CHECK(result.rate_bps_hz > 14.0);
    CHECK(result.rate_bps_hz < 15.0);
    CHECK(result.rate_bps_hz
          <= rate_upper_bound(params) + 3.0 * result.stderr_bps_hz);
    CHECK(result.stderr_bps_hz > 0.0);
    CHECK(result.stderr_bps_hz < 0.01);
  }

  TEST_CASE("rate estimates are deterministic across worker counts")
  {
    SystemParams params = reference_params(24);
    RateResult serial = mc_achievable_rate(params, 600, 77, 1);
    RateResult threaded = mc_achievable_rate(params, 600, 77, 5);
    CHECK(serial.rate_bps_hz == threaded.rate_bps_hz);
    CHECK(serial.stderr_bps_hz == threaded.stderr_bps_hz);

    RateResult reseeded = mc_achievable_rate(params, 600, 78, 1);
    CHECK(serial.rate_bps_hz != reseeded.rate_bps_hz);
  }

  TEST_CASE("overwhelming pilot power recovers the perfect-CSI rate")
  {
    SystemParams params = unit_gain_params(32, 4, 300);
    params.snr_linear = 100.0;
    params.pilot_power_dbm = 200.0;  // estimation error ~1e-20 of the signal
    RateResult estimated = mc_achievable_rate(params, 2000, 5, 4);
    RateResult perfect = mc_perfect_csi_rate(params, 2000, 5, 4);
    CHECK(estimated.rate_bps_hz
          == doctest::Approx(perfect.rate_bps_hz).epsilon(1e-6));
  }

  TEST_CASE("noisy estimation can only lose rate against perfect CSI")
  {
    SystemParams params = reference_params(8);
    RateResult estimated = mc_achievable_rate(params, 3000, 99, 4);
    RateResult perfect = mc_perfect_csi_rate(params, 3000, 99, 4);
    CHECK(estimated.rate_bps_hz <= perfect.rate_bps_hz);
  }

  TEST_CASE("the all-pilot boundary yields a zero rate")
  {
    SystemParams params = reference_params(1);
    params.frame_symbols = 361;  // K' + 1 pilots consume the whole frame
    RateResult result = mc_achievable_rate(params, 100, 1, 1);
    CHECK(result.rate_bps_hz == 0.0);
    CHECK(result.prefactor == 0.0);

    params.frame_symbols = 300;
    CHECK_THROWS_AS(mc_achievable_rate(params, 100, 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(mc_achievable_rate(reference_params(5), 0, 1, 1),
                    std::invalid_argument);
  }

  TEST_CASE("baseline with every element active equals ungrouped operation")
  {
    // Keeping all K elements on and estimating them one per pilot symbol is
    // exactly the B = 1 protocol, so the two estimators must coincide draw
    // for draw under a common seed.
    SystemParams params = unit_gain_params(48, 1, 100000);
    params.snr_linear = 50.0;
    RateResult grouped = mc_achievable_rate(params, 400, 31, 2);
    RateResult onoff = mc_onoff_rate(params, 48, 400, 31, 2);
    CHECK(onoff.rate_bps_hz == doctest::Approx(grouped.rate_bps_hz).epsilon(1e-12));
  }

  TEST_CASE("baseline loses to grouping at matched pilot overhead")
  {
    SystemParams params = reference_params(8);  // K' = 45
    RateResult grouped = mc_achievable_rate(params, 4000, 2024, 4);
    RateResult onoff
        = mc_onoff_rate(params, params.subgroup_count(), 4000, 2024, 4);
    double gap_se = std::sqrt(grouped.stderr_bps_hz * grouped.stderr_bps_hz
                              + onoff.stderr_bps_hz * onoff.stderr_bps_hz);
    CHECK(grouped.rate_bps_hz - onoff.rate_bps_hz > 3.0 * gap_se);
  }

  TEST_CASE("baseline validates its active-element count")
  {
    SystemParams params = reference_params(1);
    CHECK_THROWS_AS(mc_onoff_rate(params, 0, 100, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_onoff_rate(params, 361, 100, 1, 1),
                    std::invalid_argument);

    // A single active element still runs and pays only two pilot symbols.
    RateResult tiny = mc_onoff_rate(params, 1, 500, 3, 1);
    CHECK(tiny.prefactor == doctest::Approx(1.0 - 2.0 / 900.0));
    CHECK(tiny.rate_bps_hz > 0.0);
  }
}
