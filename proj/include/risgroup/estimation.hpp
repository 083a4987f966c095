// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "risgroup/channel.hpp"
#include "risgroup/linkbudget.hpp"
#include "risgroup/rng.hpp"

namespace risgroup
{

/*!
 * Reflection schedule for the training phase: a (K'+1) x (K'+1) DFT matrix
 * with entries exp(-j 2 pi m k / (K'+1)).
 *
 * Row m holds the unit-modulus subgroup coefficients applied during pilot
 * symbol m, prefixed by a constant 1 in column 0 that stands for the direct
 * path (which cannot be switched off). Orthogonal columns make the
 * least-squares recovery a single matched filter per unknown.
 */
struct PilotSchedule
{
  int subgroup_count = 0;
  std::vector<std::complex<double>> entries;  //!< row-major, (K'+1)^2 values

  int pilot_symbols() const { return subgroup_count + 1; }

  std::complex<double> entry(int row, int col) const
  {
    return entries[static_cast<std::size_t>(row) * (subgroup_count + 1) + col];
  }
};

//! Build the schedule for a given number of subgroups. Rejects K' < 1.
PilotSchedule pilot_matrix(int subgroup_count);

//! Baseband samples received during the training phase, one per pilot symbol.
struct PilotObservation
{
  std::vector<std::complex<double>> received;
};

/*!
 * Run the training phase over a fixed realization: for each pilot symbol m,
 *
 *   y_m = sqrt(P_tr) * (sqrt(beta_d) h_d + sqrt(beta_l) phi_m^T v') + n_m
 *
 * with n_m drawn CN(0, sigma^2). Requires realization.grouped to hold
 * exactly schedule.subgroup_count coefficients.
 */
PilotObservation simulate_pilots(const ChannelRealization& realization,
                                 const PilotSchedule& schedule,
                                 const SystemParams& params,
                                 TrialRng& rng);

/*!
 * Least-squares recovery of the composite channel: `direct` estimates
 * sqrt(beta_d) h_d and `grouped[i]` estimates sqrt(beta_l) v'_i. With the
 * orthogonal schedule this is c_hat = Phi^H y / (T_p sqrt(P_tr)), and each
 * entry carries an independent CN(0, sigma^2 / (T_p P_tr)) error.
 */
struct ChannelEstimate
{
  std::complex<double> direct{};
  std::vector<std::complex<double>> grouped;
};

ChannelEstimate ls_estimate(const PilotObservation& observation,
                            const PilotSchedule& schedule,
                            const SystemParams& params);

}  // namespace risgroup
