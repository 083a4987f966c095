// SPDX-License-Identifier: Apache-2.0
#include "risgroup/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "risgroup/channel.hpp"
#include "risgroup/estimation.hpp"
#include "risgroup/mc.hpp"
#include "risgroup/optimizer.hpp"
#include "risgroup/rng.hpp"

namespace risgroup
{

namespace
{

std::string describe(double measured, double expected, double tolerance)
{
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, "measured %.6g, expected %.6g (tol %.3g)",
                measured, expected, tolerance);
  return buffer;
}

// Three-standard-error agreement between a sampled mean and a closed form.
SelfCheck moment_check(const std::string& name, const McSummary& summary,
                       double expected)
{
  double tolerance = 3.0 * summary.stderr_mean;
  SelfCheck check;
  check.name = name;
  check.pass = std::abs(summary.mean - expected) <= tolerance;
  check.detail = describe(summary.mean, expected, tolerance);
  return check;
}

}  // namespace

std::vector<SelfCheck> moment_identity_checks(long draws, std::uint64_t seed,
                                              int workers)
{
  std::vector<SelfCheck> checks;
  const int subgroups = 8;
  for (int group_size : {1, 2, 4, 8})
  {
    GroupMoments moments = group_moments(group_size);
    double z = moments.mean_modulus;
    int elements = subgroups * group_size;

    auto draw_grouped = [&](long index)
    {
      TrialRng rng(seed + static_cast<std::uint64_t>(group_size),
                   static_cast<std::uint64_t>(index));
      ChannelRealization realization = sample_channels(elements, rng);
      return group_cascade(realization.cascaded, group_size);
    };

    auto mean_square = run_deterministic_mc(
        draws, workers,
        [&](long index)
        {
          auto grouped = draw_grouped(index);
          return std::norm(grouped.front());
        });
    checks.push_back(moment_check(
        "moment[E|v|^2] B=" + std::to_string(group_size), mean_square,
        moments.mean_square));

    auto mean_modulus = run_deterministic_mc(
        draws, workers,
        [&](long index)
        {
          auto grouped = draw_grouped(index);
          return std::abs(grouped.front());
        });
    checks.push_back(moment_check(
        "moment[E|v|] B=" + std::to_string(group_size), mean_modulus, z));

    auto coherent_square = run_deterministic_mc(
        draws, workers,
        [&](long index)
        {
          auto grouped = draw_grouped(index);
          double sum = 0.0;
          for (auto value : grouped)
            sum += std::abs(value);
          return sum * sum;
        });
    double expected_square
        = subgroups * group_size + subgroups * (subgroups - 1.0) * z * z;
    checks.push_back(moment_check(
        "moment[coherent^2] B=" + std::to_string(group_size), coherent_square,
        expected_square));

    auto cross_term = run_deterministic_mc(
        draws, workers,
        [&](long index)
        {
          TrialRng rng(seed + static_cast<std::uint64_t>(group_size),
                       static_cast<std::uint64_t>(index));
          ChannelRealization realization = sample_channels(elements, rng);
          auto grouped = group_cascade(realization.cascaded, group_size);
          double sum = 0.0;
          for (auto value : grouped)
            sum += std::abs(value);
          return std::abs(realization.direct) * sum;
        });
    double expected_cross = 0.5 * std::sqrt(std::numbers::pi) * subgroups * z;
    checks.push_back(moment_check(
        "moment[direct-cross] B=" + std::to_string(group_size), cross_term,
        expected_cross));
  }
  return checks;
}

std::vector<SelfCheck> lambert_residual_checks()
{
  std::vector<SelfCheck> checks;
  double worst = 0.0;
  double worst_x = 0.0;
  for (double exponent = -6.0; exponent <= 12.0; exponent += 0.25)
  {
    double x = std::pow(10.0, exponent);
    double w = lambert_w0(x);
    double residual = std::abs(w * std::exp(w) - x) / std::max(1.0, x);
    if (residual > worst)
    {
      worst = residual;
      worst_x = x;
    }
  }
  SelfCheck sweep;
  sweep.name = "lambert[residual sweep]";
  sweep.pass = worst <= 1e-12;
  char buffer[128];
  std::snprintf(buffer, sizeof buffer,
                "worst scaled residual %.3g at x = %.3g (tol 1e-12)", worst,
                worst_x);
  sweep.detail = buffer;
  checks.push_back(sweep);

  SelfCheck unity;
  unity.name = "lambert[W(e) = 1]";
  double at_e = lambert_w0(std::numbers::e);
  unity.pass = std::abs(at_e - 1.0) <= 1e-14;
  unity.detail = describe(at_e, 1.0, 1e-14);
  checks.push_back(unity);
  return checks;
}

std::vector<SelfCheck> estimation_roundtrip_checks(std::uint64_t seed)
{
  std::vector<SelfCheck> checks;
  const int subgroups = 8;

  PilotSchedule schedule = pilot_matrix(subgroups);
  double worst_offdiag = 0.0;
  int n = schedule.pilot_symbols();
  for (int a = 0; a < n; ++a)
  {
    for (int b = 0; b < n; ++b)
    {
      std::complex<double> inner{};
      for (int m = 0; m < n; ++m)
        inner += std::conj(schedule.entry(m, a)) * schedule.entry(m, b);
      double expected = a == b ? n : 0.0;
      worst_offdiag = std::max(worst_offdiag, std::abs(inner - expected));
    }
  }
  SelfCheck orthogonality;
  orthogonality.name = "estimation[pilot orthogonality]";
  orthogonality.pass = worst_offdiag <= 1e-12 * n;
  orthogonality.detail = describe(worst_offdiag, 0.0, 1e-12 * n);
  checks.push_back(orthogonality);

  // Noiseless round trip: with the noise floor pushed far below everything
  // else, least squares must return the composite channel almost exactly.
  SystemParams params;
  params.surface_elements = subgroups;
  params.group_size = 1;
  params.frame_symbols = 1000;
  params.noise_dbm = -2000.0;
  params.beta_direct = 1.0;
  params.beta_cascaded = 1.0;
  params.snr_linear = 1.0;

  TrialRng rng(seed, 0);
  ChannelRealization realization = sample_channels(subgroups, rng);
  realization.grouped = group_cascade(realization.cascaded, 1);
  PilotObservation observation
      = simulate_pilots(realization, schedule, params, rng);
  ChannelEstimate estimate = ls_estimate(observation, schedule, params);

  double worst_error = std::abs(estimate.direct - realization.direct);
  for (std::size_t i = 0; i < realization.grouped.size(); ++i)
    worst_error = std::max(worst_error,
                           std::abs(estimate.grouped[i] - realization.grouped[i]));
  SelfCheck roundtrip;
  roundtrip.name = "estimation[noiseless round trip]";
  roundtrip.pass = worst_error <= 1e-10;
  roundtrip.detail = describe(worst_error, 0.0, 1e-10);
  checks.push_back(roundtrip);
  return checks;
}

bool report_checks(std::ostream& out, const std::vector<SelfCheck>& checks)
{
  bool all_pass = true;
  for (const auto& check : checks)
  {
    out << (check.pass ? "PASS" : "FAIL") << "  " << check.name << ": "
        << check.detail << '\n';
    all_pass &= check.pass;
  }
  return all_pass;
}

}  // namespace risgroup
