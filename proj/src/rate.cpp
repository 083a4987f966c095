// SPDX-License-Identifier: Apache-2.0
#include "risgroup/rate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "risgroup/estimation.hpp"
#include "risgroup/mc.hpp"

namespace risgroup
{

double mean_grouped_amplitude(int group_size)
{
  return group_moments(group_size).mean_modulus;
}

BoundCoefficients bound_coefficients(int group_size, double beta_direct,
                                     double beta_cascaded)
{
  if (group_size < 1)
    throw std::invalid_argument("bound_coefficients: group size must be positive");
  if (!(beta_direct > 0.0) || !(beta_cascaded > 0.0))
    throw std::invalid_argument("bound_coefficients: link gains must be positive");

  double z = mean_grouped_amplitude(group_size);
  double b = static_cast<double>(group_size);
  BoundCoefficients coefficients;
  coefficients.mean_amplitude = z;
  coefficients.quadratic = beta_cascaded * z * z;
  coefficients.linear = beta_cascaded * (b - z * z)
                        + std::sqrt(std::numbers::pi * beta_direct * beta_cascaded) * z;
  return coefficients;
}

double rate_upper_bound(const SystemParams& params)
{
  params.validate();
  double prefactor = params.overhead_prefactor();
  if (!(prefactor > 0.0))
    throw std::invalid_argument(
        "rate_upper_bound: frame leaves no data symbols at this group size");

  auto coefficients = bound_coefficients(params.group_size, params.beta_direct,
                                         params.beta_cascaded);
  double groups = static_cast<double>(params.subgroup_count());
  double mean_power = coefficients.quadratic * groups * groups
                      + coefficients.linear * groups + params.beta_direct;
  return prefactor * std::log2(1.0 + params.snr_linear * mean_power);
}

double instantaneous_snr(const ChannelRealization& realization,
                         const PhaseConfig& config,
                         const SystemParams& params)
{
  const auto& coefficients = config.coefficients;
  const auto& reflected_channel = config.mode == PhaseMode::grouped
                                      ? realization.grouped
                                      : realization.cascaded;
  if (config.mode == PhaseMode::grouped)
  {
    if (coefficients.size() != reflected_channel.size())
      throw std::invalid_argument(
          "instantaneous_snr: coefficient count does not match subgroups");
  }
  else
  {
    if (coefficients.empty() || coefficients.size() > reflected_channel.size())
      throw std::invalid_argument(
          "instantaneous_snr: active set must be a non-empty prefix of the surface");
  }

  std::complex<double> reflected{};
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    reflected += coefficients[i] * reflected_channel[i];
  std::complex<double> combined
      = std::sqrt(params.beta_direct) * realization.direct
        + std::sqrt(params.beta_cascaded) * reflected;
  return params.snr_linear * std::norm(combined);
}

namespace
{

// Shared shape of every rate estimator: draw per-trial channels, produce a
// configuration, score log2(1 + snr), then scale the mean by the data
// fraction of the frame. The prefactor-zero boundary short-circuits: the
// frame is all pilots and the net rate is identically zero.
template <typename TrialFn>
RateResult run_rate_mc(double prefactor, long trials, int workers,
                       const TrialFn& trial_fn)
{
  if (trials < 1)
    throw std::invalid_argument("rate estimate: need at least one trial");
  if (prefactor < 0.0)
    throw std::invalid_argument(
        "rate estimate: frame too short for the pilot phase");

  RateResult result;
  result.trials = trials;
  result.prefactor = prefactor;
  if (prefactor == 0.0)
    return result;

  McSummary summary = run_deterministic_mc(trials, workers, trial_fn);
  result.rate_bps_hz = prefactor * summary.mean;
  result.stderr_bps_hz = prefactor * summary.stderr_mean;
  return result;
}

}  // namespace

RateResult mc_achievable_rate(const SystemParams& params, long trials,
                              std::uint64_t master_seed, int workers)
{
  params.validate();
  PilotSchedule schedule = pilot_matrix(params.subgroup_count());
  auto trial = [&params, &schedule, master_seed](long index)
  {
    TrialRng rng(master_seed, static_cast<std::uint64_t>(index));
    ChannelRealization realization
        = sample_channels(params.surface_elements, rng);
    realization.grouped
        = group_cascade(realization.cascaded, params.group_size);
    PilotObservation observation
        = simulate_pilots(realization, schedule, params, rng);
    ChannelEstimate estimate = ls_estimate(observation, schedule, params);
    PhaseConfig config = estimated_phases(estimate);
    return std::log2(1.0 + instantaneous_snr(realization, config, params));
  };
  return run_rate_mc(params.overhead_prefactor(), trials, workers, trial);
}

RateResult mc_perfect_csi_rate(const SystemParams& params, long trials,
                               std::uint64_t master_seed, int workers)
{
  params.validate();
  auto trial = [&params, master_seed](long index)
  {
    TrialRng rng(master_seed, static_cast<std::uint64_t>(index));
    ChannelRealization realization
        = sample_channels(params.surface_elements, rng);
    realization.grouped
        = group_cascade(realization.cascaded, params.group_size);
    PhaseConfig config = optimal_phases(realization.direct, realization.grouped);
    return std::log2(1.0 + instantaneous_snr(realization, config, params));
  };
  return run_rate_mc(params.overhead_prefactor(), trials, workers, trial);
}

RateResult mc_onoff_rate(const SystemParams& params, int active_elements,
                         long trials, std::uint64_t master_seed, int workers)
{
  params.validate();
  if (active_elements < 1 || active_elements > params.surface_elements)
    throw std::invalid_argument(
        "mc_onoff_rate: active element count must lie in [1, K]");

  // The baseline trains one element per pilot symbol, so its overhead is set
  // by the active count, not by any grouping.
  double prefactor
      = 1.0 - static_cast<double>(active_elements + 1) / params.frame_symbols;
  PilotSchedule schedule = pilot_matrix(active_elements);
  auto trial = [&params, &schedule, active_elements, master_seed](long index)
  {
    TrialRng rng(master_seed, static_cast<std::uint64_t>(index));
    ChannelRealization realization
        = sample_channels(params.surface_elements, rng);
    realization.grouped.assign(
        realization.cascaded.begin(),
        realization.cascaded.begin() + active_elements);
    PilotObservation observation
        = simulate_pilots(realization, schedule, params, rng);
    ChannelEstimate estimate = ls_estimate(observation, schedule, params);
    PhaseConfig config = onoff_config(estimate.direct, estimate.grouped);
    return std::log2(1.0 + instantaneous_snr(realization, config, params));
  };
  return run_rate_mc(prefactor, trials, workers, trial);
}

}  // namespace risgroup
