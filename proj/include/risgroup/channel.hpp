// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "risgroup/rng.hpp"

namespace risgroup
{

/*!
 * One fading realization, normalized to unit average element gain; link
 * budget scaling is applied later where the signals are formed.
 *
 * `cascaded` holds the per-element two-hop products h_k * g_k. `grouped`
 * starts empty and is filled by group_cascade() with the per-subgroup sums.
 */
struct ChannelRealization
{
  std::vector<std::complex<double>> source_surface;       //!< first hop, length K
  std::vector<std::complex<double>> surface_destination;  //!< second hop, length K
  std::complex<double> direct{};                          //!< direct path
  std::vector<std::complex<double>> cascaded;             //!< elementwise product
  std::vector<std::complex<double>> grouped;              //!< per-subgroup sums
};

//! Draw all small-scale coefficients i.i.d. CN(0,1). `grouped` is left empty.
ChannelRealization sample_channels(int surface_elements, TrialRng& rng);

/*!
 * Sum consecutive runs of `group_size` cascaded coefficients into one
 * effective coefficient per subgroup. With K elements this yields
 * floor(K/B) sums; a trailing remainder of fewer than B elements is
 * dropped, matching a surface that leaves those elements unconfigured.
 */
std::vector<std::complex<double>> group_cascade(
    std::span<const std::complex<double>> cascaded, int group_size);

/*!
 * Closed-form moments of one grouped coefficient v' (a sum of B independent
 * products of unit-variance complex Gaussians):
 *
 *   E[|v'|^2] = B
 *   E[|v'|]   = sqrt(pi)/2 * Gamma(B + 1/2) / Gamma(B)
 *
 * The Gamma ratio is evaluated in log space so large B stays finite.
 */
struct GroupMoments
{
  double mean_square;    //!< E[|v'|^2]
  double mean_modulus;   //!< E[|v'|]
};

GroupMoments group_moments(int group_size);

}  // namespace risgroup
