// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "risgroup/linkbudget.hpp"

namespace risgroup
{

/*!
 * Principal branch of the Lambert W function on x >= 0: the w >= 0 with
 * w e^w = x. Bracketed initial guess (asymptotic log form for large x,
 * series/rational form for small x) polished by Halley iteration; the
 * residual |w e^w - x| stays within 1e-12 * max(1, x) over the supported
 * range. Rejects negative arguments.
 */
double lambert_w0(double x);

//! Result of fitting amplitude data to kappa * B^eta.
struct PowerFit
{
  double coefficient = 0.0;    //!< kappa
  double exponent = 0.0;       //!< eta
  double log_rms_residual = 0.0;
};

/*!
 * Log-domain least squares of y_b ~ kappa * b^eta to samples y_1..y_n
 * (values[i] is the sample at b = i + 1). The two-parameter overload fits
 * both kappa and eta; the three-parameter one pins eta and fits only kappa.
 */
PowerFit fit_power_law(std::span<const double> values);
PowerFit fit_power_law(std::span<const double> values, double fixed_exponent);

/*!
 * Fit the grouped-amplitude curve E[|v'|](B) over B = 1..max_group_size to
 * kappa * B^eta. The free fit lands near eta = 1/2; the pinned eta = 1/2
 * variant yields the kappa used to calibrate the closed-form group size.
 * Requires max_group_size >= 8 so the fit sees the curve, not the knee.
 */
PowerFit fit_z_power(int max_group_size);
PowerFit fit_z_power(int max_group_size, double fixed_exponent);

/*!
 * Scale constants of the closed-form rule. The Lambert argument is
 * zeta * gamma * (T_c - 1) * K with zeta = zeta_over_beta * beta_cascaded;
 * defaults() uses the reference value 2.08, from_fit() recalibrates it as
 * e * kappa^2 with kappa taken from the pinned-exponent amplitude fit.
 */
struct ClosedFormConstants
{
  double zeta_over_beta = 2.08;

  static ClosedFormConstants defaults() { return {}; }
  static ClosedFormConstants from_fit(int max_group_size = 64);
};

enum class GroupSizeMethod
{
  brute_force,
  closed_form,
  closed_form_alt,
};

//! Selected operating point, with the bound value it achieves.
struct GroupSizeResult
{
  int group_size = 0;      //!< chosen B
  int subgroup_count = 0;  //!< floor(K/B) at that choice
  double rate_bound = 0.0; //!< rate_upper_bound evaluated at the choice
  GroupSizeMethod method = GroupSizeMethod::brute_force;
};

/*!
 * Closed-form group size: B = floor(K/(T_c - 1) * W(zeta gamma (T_c-1) K) + 1/2),
 * clamped to [1, K]. params.group_size is ignored; the rest of params fixes
 * the operating point. Requires the clamped choice to leave a positive
 * prefactor.
 */
GroupSizeResult optimal_group_closed_form(
    const SystemParams& params,
    const ClosedFormConstants& constants = ClosedFormConstants::defaults());

//! Algebraically equivalent rewriting, B = floor(zeta gamma K^2 *
//! exp(-W(zeta gamma (T_c-1) K)) + 1/2); must agree with the primary form.
GroupSizeResult optimal_group_alt_form(
    const SystemParams& params,
    const ClosedFormConstants& constants = ClosedFormConstants::defaults());

/*!
 * Reference search: evaluate the rate upper bound at every feasible group
 * size 1..K (those leaving a positive prefactor) and keep the argmax, with
 * ties broken toward the smaller B. Rejects parameter sets with no feasible
 * size.
 */
GroupSizeResult optimal_group_brute_force(const SystemParams& params);

}  // namespace risgroup
