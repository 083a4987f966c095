// SPDX-License-Identifier: Apache-2.0
#include "risgroup/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risgroup
{

ChannelRealization sample_channels(int surface_elements, TrialRng& rng)
{
  if (surface_elements < 1)
    throw std::invalid_argument("sample_channels: need at least one element");

  ChannelRealization realization;
  auto count = static_cast<std::size_t>(surface_elements);
  realization.source_surface.resize(count);
  realization.surface_destination.resize(count);
  realization.cascaded.resize(count);

  realization.direct = rng.complex_normal();
  for (std::size_t k = 0; k < count; ++k)
  {
    realization.source_surface[k] = rng.complex_normal();
    realization.surface_destination[k] = rng.complex_normal();
    realization.cascaded[k]
        = realization.source_surface[k] * realization.surface_destination[k];
  }
  return realization;
}

std::vector<std::complex<double>> group_cascade(
    std::span<const std::complex<double>> cascaded, int group_size)
{
  if (group_size < 1)
    throw std::invalid_argument("group_cascade: group size must be positive");
  if (static_cast<std::size_t>(group_size) > cascaded.size())
    throw std::invalid_argument(
        "group_cascade: group size exceeds the number of elements");

  std::size_t groups = cascaded.size() / static_cast<std::size_t>(group_size);
  std::vector<std::complex<double>> grouped(groups);
  for (std::size_t i = 0; i < groups; ++i)
  {
    std::complex<double> sum{};
    for (std::size_t b = 0; b < static_cast<std::size_t>(group_size); ++b)
      sum += cascaded[i * group_size + b];
    grouped[i] = sum;
  }
  return grouped;
}

GroupMoments group_moments(int group_size)
{
  if (group_size < 1)
    throw std::invalid_argument("group_moments: group size must be positive");

  // E[|v'|] = sqrt(pi)/2 * Gamma(B + 1/2)/Gamma(B); the ratio via lgamma so
  // B in the hundreds does not overflow Gamma itself.
  double b = static_cast<double>(group_size);
  double ratio = std::exp(std::lgamma(b + 0.5) - std::lgamma(b));
  return GroupMoments{b, 0.5 * std::sqrt(std::numbers::pi) * ratio};
}

}  // namespace risgroup
