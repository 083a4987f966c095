// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "risgroup/estimation.hpp"

namespace risgroup
{

//! How the coefficient vector maps onto the surface.
enum class PhaseMode
{
  grouped,  //!< one coefficient per subgroup of B elements
  onoff,    //!< one coefficient per individual element; absent elements are off
};

/*!
 * A reflection configuration for the data phase. All stored coefficients have
 * unit modulus; in `onoff` mode the vector may be shorter than the surface,
 * and the remaining elements reflect nothing.
 */
struct PhaseConfig
{
  PhaseMode mode = PhaseMode::grouped;
  std::vector<std::complex<double>> coefficients;
};

/*!
 * Phase-align every subgroup with the direct path: coefficient i is
 * exp(j(arg(h_d) - arg(v'_i))), which turns the combined channel into the
 * coherent sum sqrt(beta_d)|h_d| + sqrt(beta_l) sum |v'_i|. A zero
 * coefficient input (probability zero under the fading model) falls back to
 * a unit coefficient.
 */
PhaseConfig optimal_phases(std::complex<double> direct,
                           std::span<const std::complex<double>> grouped);

//! Same alignment computed from least-squares estimates. Scale-free: any
//! positive common scaling of the estimate leaves the result unchanged.
PhaseConfig estimated_phases(const ChannelEstimate& estimate);

/*!
 * Element-wise baseline: align each individually estimated element with the
 * direct path and leave the rest of the surface off. `element_estimates`
 * holds the composite estimates of the active elements, in surface order.
 */
PhaseConfig onoff_config(std::complex<double> direct_estimate,
                         std::span<const std::complex<double>> element_estimates);

}  // namespace risgroup
