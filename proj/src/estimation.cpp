// SPDX-License-Identifier: Apache-2.0
#include "risgroup/estimation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risgroup
{

PilotSchedule pilot_matrix(int subgroup_count)
{
  if (subgroup_count < 1)
    throw std::invalid_argument("pilot_matrix: need at least one subgroup");

  PilotSchedule schedule;
  schedule.subgroup_count = subgroup_count;
  int n = subgroup_count + 1;
  schedule.entries.resize(static_cast<std::size_t>(n) * n);
  for (int m = 0; m < n; ++m)
  {
    for (int k = 0; k < n; ++k)
    {
      double angle = -2.0 * std::numbers::pi * m * k / n;
      schedule.entries[static_cast<std::size_t>(m) * n + k]
          = std::polar(1.0, angle);
    }
  }
  return schedule;
}

PilotObservation simulate_pilots(const ChannelRealization& realization,
                                 const PilotSchedule& schedule,
                                 const SystemParams& params,
                                 TrialRng& rng)
{
  std::size_t groups = static_cast<std::size_t>(schedule.subgroup_count);
  if (realization.grouped.size() != groups)
    throw std::invalid_argument(
        "simulate_pilots: grouped channel length does not match the schedule");

  double pilot_amplitude = std::sqrt(params.pilot_power_mw());
  double noise_amplitude = std::sqrt(params.noise_power_mw());
  double direct_amplitude = std::sqrt(params.beta_direct);
  double cascaded_amplitude = std::sqrt(params.beta_cascaded);

  PilotObservation observation;
  observation.received.resize(static_cast<std::size_t>(schedule.pilot_symbols()));
  for (int m = 0; m < schedule.pilot_symbols(); ++m)
  {
    std::complex<double> reflected{};
    for (std::size_t i = 0; i < groups; ++i)
      reflected += schedule.entry(m, static_cast<int>(i) + 1)
                   * realization.grouped[i];
    std::complex<double> composite
        = direct_amplitude * realization.direct + cascaded_amplitude * reflected;
    observation.received[static_cast<std::size_t>(m)]
        = pilot_amplitude * composite + noise_amplitude * rng.complex_normal();
  }
  return observation;
}

ChannelEstimate ls_estimate(const PilotObservation& observation,
                            const PilotSchedule& schedule,
                            const SystemParams& params)
{
  int n = schedule.pilot_symbols();
  if (observation.received.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument(
        "ls_estimate: observation length does not match the schedule");

  // With an orthogonal schedule the least-squares solution collapses to one
  // matched filter per unknown: c_hat = Phi^H y / (T_p sqrt(P_tr)).
  double scale = 1.0 / (n * std::sqrt(params.pilot_power_mw()));

  ChannelEstimate estimate;
  estimate.grouped.resize(static_cast<std::size_t>(schedule.subgroup_count));
  for (int k = 0; k < n; ++k)
  {
    std::complex<double> accumulator{};
    for (int m = 0; m < n; ++m)
      accumulator += std::conj(schedule.entry(m, k))
                     * observation.received[static_cast<std::size_t>(m)];
    if (k == 0)
      estimate.direct = scale * accumulator;
    else
      estimate.grouped[static_cast<std::size_t>(k - 1)] = scale * accumulator;
  }
  return estimate;
}

}  // namespace risgroup
