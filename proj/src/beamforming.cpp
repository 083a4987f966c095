// SPDX-License-Identifier: Apache-2.0
#include "risgroup/beamforming.hpp"

#include <cmath>
#include <stdexcept>

namespace risgroup
{

namespace
{

// exp(j(arg(reference) - arg(coefficient))): rotates `coefficient` onto the
// ray of `reference`. Degenerate zero inputs (measure zero under the fading
// model) fall back to a neutral unit coefficient.
std::complex<double> align_coefficient(std::complex<double> reference,
                                       std::complex<double> coefficient)
{
  if (coefficient == std::complex<double>{})
    return {1.0, 0.0};
  return std::polar(1.0, std::arg(reference) - std::arg(coefficient));
}

std::vector<std::complex<double>> align_all(
    std::complex<double> reference,
    std::span<const std::complex<double>> coefficients)
{
  std::vector<std::complex<double>> aligned(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    aligned[i] = align_coefficient(reference, coefficients[i]);
  return aligned;
}

}  // namespace

PhaseConfig optimal_phases(std::complex<double> direct,
                           std::span<const std::complex<double>> grouped)
{
  return PhaseConfig{PhaseMode::grouped, align_all(direct, grouped)};
}

PhaseConfig estimated_phases(const ChannelEstimate& estimate)
{
  return PhaseConfig{PhaseMode::grouped,
                     align_all(estimate.direct, estimate.grouped)};
}

PhaseConfig onoff_config(std::complex<double> direct_estimate,
                         std::span<const std::complex<double>> element_estimates)
{
  if (element_estimates.empty())
    throw std::invalid_argument("onoff_config: need at least one active element");
  return PhaseConfig{PhaseMode::onoff,
                     align_all(direct_estimate, element_estimates)};
}

}  // namespace risgroup
