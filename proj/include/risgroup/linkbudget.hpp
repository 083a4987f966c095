// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace risgroup
{

//! Convert a dB (or dBm) quantity to linear scale: 10^(x/10).
double db_to_linear(double value_db);

//! Convert a positive linear quantity to dB: 10*log10(x). Rejects x <= 0.
double linear_to_db(double value_linear);

/*!
 * Node placement for the two-hop deployment, in meters.
 *
 * The source and the reflecting surface sit on a common axis separated by
 * `source_surface_m`. The destination sits `source_destination_m` along that
 * axis and `destination_offset_m` perpendicular to it, so the surface-to-
 * destination hop has length sqrt((d0 - d)^2 + dv^2).
 */
struct Geometry
{
  double source_surface_m     = 51.0;
  double source_destination_m = 48.0;
  double destination_offset_m = 2.0;

  //! Length of the reflected second hop.
  double surface_destination_m() const;

  //! Rejects non-positive axis distances and a degenerate second hop.
  void validate() const;
};

/*!
 * Distance-based average path loss: beta(d) = 10^(c0/10) * d^-alpha, with a
 * common reference loss `reference_db` at 1 m and separate exponents for the
 * direct link and the reflected (two-hop) link.
 */
struct PathLossModel
{
  double reference_db      = -30.0;
  double direct_exponent   = 3.5;
  double cascaded_exponent = 2.0;

  void validate() const;
};

//! Average power gain of the direct source-destination link.
double pathloss_direct(const Geometry& geometry, const PathLossModel& model);

/*!
 * Average power gain of one reflected element path. The two hops multiply, so
 * the reference constant is applied once to the product distance:
 * 10^(c0/10) * (d_sr * d_rd)^-alpha.
 */
double pathloss_cascaded(const Geometry& geometry, const PathLossModel& model);

//! Linear SNR for a transmit power and noise floor given in dBm.
double transmit_snr(double power_dbm, double noise_dbm);

/*!
 * Full parameter set for one operating point: surface size, grouping factor,
 * frame length, powers and the derived link gains. Everything downstream
 * (pilot simulation, rate estimates, bound evaluation) reads from this.
 */
struct SystemParams
{
  int surface_elements  = 360;  //!< number of reflecting elements
  int group_size        = 1;    //!< elements driven by one common coefficient
  int frame_symbols     = 900;  //!< symbols per coherence frame

  double pilot_power_dbm = 0.0;
  double data_power_dbm  = 0.0;
  double noise_dbm       = -80.0;

  double beta_direct   = 0.0;  //!< linear gain of the direct link
  double beta_cascaded = 0.0;  //!< linear gain of one element path
  double snr_linear    = 0.0;  //!< data-phase transmit SNR, P/sigma^2

  //! Number of independently controlled subgroups, floor(K/B).
  int subgroup_count() const;

  //! Pilot symbols needed to estimate the direct path plus all subgroups.
  int pilot_symbols() const { return subgroup_count() + 1; }

  double pilot_power_mw() const;
  double noise_power_mw() const;

  //! Fraction of the frame left for data: 1 - (K' + 1)/T_c. May be zero at
  //! the degenerate boundary T_c = K' + 1; validate() rejects negatives.
  double overhead_prefactor() const;

  //! Rejects inconsistent sizes, non-positive gains and frames too short to
  //! fit the pilot phase.
  void validate() const;
};

//! Assemble a SystemParams from geometry and model, deriving the link gains
//! and the linear SNR. Validates everything.
SystemParams make_system_params(const Geometry& geometry,
                                const PathLossModel& model,
                                int surface_elements,
                                int group_size,
                                int frame_symbols,
                                double pilot_power_dbm,
                                double data_power_dbm,
                                double noise_dbm);

}  // namespace risgroup
