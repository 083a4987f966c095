// SPDX-License-Identifier: Apache-2.0
#include "risgroup/linkbudget.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace risgroup
{

double db_to_linear(double value_db)
{
  return std::pow(10.0, value_db / 10.0);
}

double linear_to_db(double value_linear)
{
  if (!(value_linear > 0.0))
    throw std::invalid_argument("linear_to_db: value must be positive");
  return 10.0 * std::log10(value_linear);
}

double Geometry::surface_destination_m() const
{
  return std::hypot(source_surface_m - source_destination_m,
                    destination_offset_m);
}

void Geometry::validate() const
{
  if (!(source_surface_m > 0.0))
    throw std::invalid_argument("geometry: source-surface distance must be positive");
  if (!(source_destination_m > 0.0))
    throw std::invalid_argument("geometry: source-destination distance must be positive");
  if (!(destination_offset_m >= 0.0))
    throw std::invalid_argument("geometry: destination offset must be non-negative");
  if (!(surface_destination_m() > 0.0))
    throw std::invalid_argument("geometry: surface and destination coincide");
}

void PathLossModel::validate() const
{
  if (!std::isfinite(reference_db))
    throw std::invalid_argument("path loss: reference must be finite");
  if (!(direct_exponent >= 0.0) || !(cascaded_exponent >= 0.0))
    throw std::invalid_argument("path loss: exponents must be non-negative");
}

double pathloss_direct(const Geometry& geometry, const PathLossModel& model)
{
  geometry.validate();
  model.validate();
  return db_to_linear(model.reference_db)
         * std::pow(geometry.source_destination_m, -model.direct_exponent);
}

double pathloss_cascaded(const Geometry& geometry, const PathLossModel& model)
{
  geometry.validate();
  model.validate();
  double product = geometry.source_surface_m * geometry.surface_destination_m();
  return db_to_linear(model.reference_db)
         * std::pow(product, -model.cascaded_exponent);
}

double transmit_snr(double power_dbm, double noise_dbm)
{
  return db_to_linear(power_dbm - noise_dbm);
}

int SystemParams::subgroup_count() const
{
  return surface_elements / group_size;
}

double SystemParams::pilot_power_mw() const
{
  return db_to_linear(pilot_power_dbm);
}

double SystemParams::noise_power_mw() const
{
  return db_to_linear(noise_dbm);
}

double SystemParams::overhead_prefactor() const
{
  return 1.0 - static_cast<double>(pilot_symbols()) / frame_symbols;
}

void SystemParams::validate() const
{
  if (surface_elements < 1)
    throw std::invalid_argument("params: need at least one surface element");
  if (group_size < 1 || group_size > surface_elements)
    throw std::invalid_argument("params: group size must lie in [1, K], got "
                                + std::to_string(group_size));
  if (frame_symbols < 2)
    throw std::invalid_argument("params: frame must span at least two symbols");
  if (frame_symbols < pilot_symbols())
    throw std::invalid_argument(
        "params: frame too short for the pilot phase at this group size ("
        + std::to_string(pilot_symbols()) + " pilots vs "
        + std::to_string(frame_symbols) + " symbols)");
  if (!(beta_direct > 0.0) || !(beta_cascaded > 0.0))
    throw std::invalid_argument("params: link gains must be positive");
  if (!(snr_linear > 0.0))
    throw std::invalid_argument("params: transmit SNR must be positive");
  if (!std::isfinite(pilot_power_dbm) || !std::isfinite(data_power_dbm)
      || !std::isfinite(noise_dbm))
    throw std::invalid_argument("params: powers must be finite");
}

SystemParams make_system_params(const Geometry& geometry,
                                const PathLossModel& model,
                                int surface_elements,
                                int group_size,
                                int frame_symbols,
                                double pilot_power_dbm,
                                double data_power_dbm,
                                double noise_dbm)
{
  SystemParams params;
  params.surface_elements = surface_elements;
  params.group_size = group_size;
  params.frame_symbols = frame_symbols;
  params.pilot_power_dbm = pilot_power_dbm;
  params.data_power_dbm = data_power_dbm;
  params.noise_dbm = noise_dbm;
  params.beta_direct = pathloss_direct(geometry, model);
  params.beta_cascaded = pathloss_cascaded(geometry, model);
  params.snr_linear = transmit_snr(data_power_dbm, noise_dbm);
  params.validate();
  return params;
}

}  // namespace risgroup
