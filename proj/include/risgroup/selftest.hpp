// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace risgroup
{

//! Outcome of one internal consistency check.
struct SelfCheck
{
  std::string name;
  bool pass = false;
  std::string detail;
};

/*!
 * Monte-Carlo checks of the closed-form channel moments against sampled
 * statistics (each within three standard errors): per-coefficient mean
 * square and mean modulus, the squared coherent sum, and the direct/cascaded
 * cross term, over a small grid of group sizes.
 */
std::vector<SelfCheck> moment_identity_checks(long draws, std::uint64_t seed,
                                              int workers);

//! Residual check of the Lambert W evaluation over a wide logarithmic grid.
std::vector<SelfCheck> lambert_residual_checks();

//! Pilot-schedule orthogonality and noiseless least-squares round trip.
std::vector<SelfCheck> estimation_roundtrip_checks(std::uint64_t seed);

//! Print one line per check; returns true when everything passed.
bool report_checks(std::ostream& out, const std::vector<SelfCheck>& checks);

}  // namespace risgroup
