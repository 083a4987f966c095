// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "risgroup/beamforming.hpp"
#include "risgroup/channel.hpp"
#include "risgroup/linkbudget.hpp"

namespace risgroup
{

//! Net spectral efficiency estimate from a Monte-Carlo run.
struct RateResult
{
  double rate_bps_hz = 0.0;    //!< prefactor * mean log2(1 + snr)
  double stderr_bps_hz = 0.0;  //!< standard error of the estimate
  long trials = 0;
  double prefactor = 0.0;      //!< data fraction of the frame
};

//! Mean modulus of one grouped coefficient, E[|v'|]; grows like sqrt(B).
double mean_grouped_amplitude(int group_size);

/*!
 * Coefficients of the mean-SNR polynomial in the subgroup count K':
 *
 *   E[|combined|^2] = quadratic * K'^2 + linear * K' + beta_direct
 *
 * under ideal phase alignment, where with z = E[|v'|]:
 *   quadratic = beta_cascaded * z^2
 *   linear    = beta_cascaded * (B - z^2) + sqrt(pi beta_direct beta_cascaded) * z
 */
struct BoundCoefficients
{
  double mean_amplitude;  //!< z
  double quadratic;
  double linear;
};

BoundCoefficients bound_coefficients(int group_size, double beta_direct,
                                     double beta_cascaded);

/*!
 * Jensen upper bound on the net rate:
 *
 *   (1 - (K'+1)/T_c) * log2(1 + gamma (quadratic K'^2 + linear K' + beta_d))
 *
 * Requires a strictly positive prefactor.
 */
double rate_upper_bound(const SystemParams& params);

/*!
 * Received data-phase SNR for one realization under a given configuration:
 * gamma * |sqrt(beta_d) h_d + sqrt(beta_l) sum_i phi_i c_i|^2, where c is
 * the grouped vector in grouped mode and the leading per-element cascaded
 * coefficients in on-off mode. Rejects mismatched dimensions.
 */
double instantaneous_snr(const ChannelRealization& realization,
                         const PhaseConfig& config,
                         const SystemParams& params);

/*!
 * Net achievable rate with pilot-based estimation: each trial draws fresh
 * channels, runs the training phase, phase-aligns from the estimates and
 * scores log2(1 + snr); the mean is scaled by the overhead prefactor.
 *
 * Deterministic in (master_seed, trials) for every worker count. A frame
 * exactly consumed by pilots (prefactor 0) short-circuits to a zero rate;
 * a frame shorter than the pilot phase is rejected.
 */
RateResult mc_achievable_rate(const SystemParams& params, long trials,
                              std::uint64_t master_seed, int workers = 1);

//! Same protocol but phase-aligned from the true channels (perfect CSI);
//! the pilot overhead is still paid. Upper-bounds mc_achievable_rate.
RateResult mc_perfect_csi_rate(const SystemParams& params, long trials,
                               std::uint64_t master_seed, int workers = 1);

/*!
 * Ungrouped baseline that keeps the pilot budget small by switching all but
 * `active_elements` elements off: those elements are estimated individually
 * (T_p = active_elements + 1) and phase-aligned; the rest stay dark. Uses
 * params.surface_elements channels, ignoring params.group_size.
 */
RateResult mc_onoff_rate(const SystemParams& params, int active_elements,
                         long trials, std::uint64_t master_seed,
                         int workers = 1);

}  // namespace risgroup
