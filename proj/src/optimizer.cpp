// SPDX-License-Identifier: Apache-2.0
#include "risgroup/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "risgroup/channel.hpp"
#include "risgroup/rate.hpp"

namespace risgroup
{

double lambert_w0(double x)
{
  if (x < 0.0)
    throw std::invalid_argument(
        "lambert_w0: argument must be non-negative on the principal branch");
  if (x == 0.0)
    return 0.0;

  // Initial guess: two-term asymptotic expansion beyond e, a truncated
  // series near zero, and a rational interpolant in between. All three land
  // close enough for Halley's cubic convergence to finish in a few steps.
  double w;
  if (x > std::numbers::e)
  {
    double lx = std::log(x);
    double llx = std::log(lx);
    w = lx - llx + llx / lx;
  }
  else if (x < 0.25)
  {
    w = x * (1.0 - x + 1.5 * x * x);
  }
  else
  {
    w = x / (1.0 + x);
  }

  for (int iteration = 0; iteration < 64; ++iteration)
  {
    double ew = std::exp(w);
    double residual = w * ew - x;
    // Halley: f = w e^w - x, f' = e^w (w + 1), f'' = e^w (w + 2).
    double denominator
        = ew * (w + 1.0) - (w + 2.0) * residual / (2.0 * w + 2.0);
    double step = residual / denominator;
    w -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(w)))
      break;
  }
  return w;
}

PowerFit fit_power_law(std::span<const double> values)
{
  if (values.size() < 2)
    throw std::invalid_argument("fit_power_law: need at least two samples");

  std::size_t n = values.size();
  double sum_x = 0.0, sum_y = 0.0, sum_xx = 0.0, sum_xy = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    if (!(values[i] > 0.0))
      throw std::invalid_argument("fit_power_law: samples must be positive");
    double x = std::log(static_cast<double>(i + 1));
    double y = std::log(values[i]);
    sum_x += x;
    sum_y += y;
    sum_xx += x * x;
    sum_xy += x * y;
  }
  double count = static_cast<double>(n);
  double exponent = (count * sum_xy - sum_x * sum_y)
                    / (count * sum_xx - sum_x * sum_x);
  double log_coefficient = (sum_y - exponent * sum_x) / count;

  PowerFit fit;
  fit.exponent = exponent;
  fit.coefficient = std::exp(log_coefficient);
  double squared = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    double x = std::log(static_cast<double>(i + 1));
    double deviation = log_coefficient + exponent * x - std::log(values[i]);
    squared += deviation * deviation;
  }
  fit.log_rms_residual = std::sqrt(squared / count);
  return fit;
}

PowerFit fit_power_law(std::span<const double> values, double fixed_exponent)
{
  if (values.empty())
    throw std::invalid_argument("fit_power_law: need at least one sample");

  // With the exponent pinned, least squares in log space reduces to the mean
  // offset: log kappa = mean(log y_b - eta log b).
  std::size_t n = values.size();
  double sum_offset = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    if (!(values[i] > 0.0))
      throw std::invalid_argument("fit_power_law: samples must be positive");
    sum_offset += std::log(values[i])
                  - fixed_exponent * std::log(static_cast<double>(i + 1));
  }
  double log_coefficient = sum_offset / static_cast<double>(n);

  PowerFit fit;
  fit.exponent = fixed_exponent;
  fit.coefficient = std::exp(log_coefficient);
  double squared = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    double deviation = log_coefficient
                       + fixed_exponent * std::log(static_cast<double>(i + 1))
                       - std::log(values[i]);
    squared += deviation * deviation;
  }
  fit.log_rms_residual = std::sqrt(squared / static_cast<double>(n));
  return fit;
}

namespace
{

std::vector<double> amplitude_samples(int max_group_size)
{
  if (max_group_size < 8)
    throw std::invalid_argument(
        "fit_z_power: need group sizes up to at least 8 for a stable fit");
  std::vector<double> values(static_cast<std::size_t>(max_group_size));
  for (int b = 1; b <= max_group_size; ++b)
    values[static_cast<std::size_t>(b - 1)] = mean_grouped_amplitude(b);
  return values;
}

}  // namespace

PowerFit fit_z_power(int max_group_size)
{
  auto values = amplitude_samples(max_group_size);
  return fit_power_law(values);
}

PowerFit fit_z_power(int max_group_size, double fixed_exponent)
{
  auto values = amplitude_samples(max_group_size);
  return fit_power_law(values, fixed_exponent);
}

ClosedFormConstants ClosedFormConstants::from_fit(int max_group_size)
{
  double kappa = fit_z_power(max_group_size, 0.5).coefficient;
  return ClosedFormConstants{std::numbers::e * kappa * kappa};
}

namespace
{

GroupSizeResult finish_choice(const SystemParams& params, int group_size,
                              GroupSizeMethod method)
{
  SystemParams chosen = params;
  chosen.group_size = std::clamp(group_size, 1, params.surface_elements);
  GroupSizeResult result;
  result.group_size = chosen.group_size;
  result.subgroup_count = chosen.subgroup_count();
  result.rate_bound = rate_upper_bound(chosen);
  result.method = method;
  return result;
}

void check_optimizer_inputs(const SystemParams& params)
{
  SystemParams probe = params;
  probe.group_size = params.surface_elements;  // always structurally valid
  probe.validate();
}

}  // namespace

GroupSizeResult optimal_group_closed_form(const SystemParams& params,
                                          const ClosedFormConstants& constants)
{
  check_optimizer_inputs(params);
  double zeta = constants.zeta_over_beta * params.beta_cascaded;
  double elements = static_cast<double>(params.surface_elements);
  double data_span = static_cast<double>(params.frame_symbols) - 1.0;
  double w = lambert_w0(zeta * params.snr_linear * data_span * elements);
  double continuous = elements / data_span * w;
  int choice = static_cast<int>(std::floor(continuous + 0.5));
  return finish_choice(params, choice, GroupSizeMethod::closed_form);
}

GroupSizeResult optimal_group_alt_form(const SystemParams& params,
                                       const ClosedFormConstants& constants)
{
  check_optimizer_inputs(params);
  // Same solution written through w = ln(zeta gamma K^2 / B): exponentiating
  // the Lambert identity trades the ratio for exp(-W).
  double zeta = constants.zeta_over_beta * params.beta_cascaded;
  double elements = static_cast<double>(params.surface_elements);
  double data_span = static_cast<double>(params.frame_symbols) - 1.0;
  double scaled_snr = zeta * params.snr_linear;
  double w = lambert_w0(scaled_snr * data_span * elements);
  double continuous = scaled_snr * elements * elements * std::exp(-w);
  int choice = static_cast<int>(std::floor(continuous + 0.5));
  return finish_choice(params, choice, GroupSizeMethod::closed_form_alt);
}

GroupSizeResult optimal_group_brute_force(const SystemParams& params)
{
  check_optimizer_inputs(params);
  bool found = false;
  int best_group = 0;
  double best_bound = 0.0;
  for (int b = 1; b <= params.surface_elements; ++b)
  {
    SystemParams candidate = params;
    candidate.group_size = b;
    if (!(candidate.overhead_prefactor() > 0.0))
      continue;
    double bound = rate_upper_bound(candidate);
    // Strict improvement only, so ties resolve to the smallest group size.
    if (!found || bound > best_bound)
    {
      found = true;
      best_group = b;
      best_bound = bound;
    }
  }
  if (!found)
    throw std::invalid_argument(
        "optimal_group_brute_force: no group size fits the pilot phase into "
        "this frame");
  return finish_choice(params, best_group, GroupSizeMethod::brute_force);
}

}  // namespace risgroup
