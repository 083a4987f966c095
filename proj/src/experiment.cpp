// SPDX-License-Identifier: Apache-2.0
#include "risgroup/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "risgroup/optimizer.hpp"
#include "risgroup/rate.hpp"

namespace risgroup
{

namespace
{

bool integer_variable(SweepVariable variable)
{
  return variable == SweepVariable::group_size
         || variable == SweepVariable::subgroup_count
         || variable == SweepVariable::frame_symbols;
}

int to_int(double value)
{
  return static_cast<int>(std::lround(value));
}

}  // namespace

std::vector<double> SweepSpec::grid() const
{
  validate();
  std::vector<double> values;
  // Half-step slack absorbs accumulated rounding so the stop point itself is
  // always included when it lies on the grid.
  for (double v = start; v <= stop + 0.5 * step; v += step)
    values.push_back(v);
  return values;
}

void SweepSpec::validate() const
{
  if (!(step > 0.0))
    throw std::invalid_argument("sweep: step must be positive");
  if (stop < start)
    throw std::invalid_argument("sweep: stop must not precede start");
  if (integer_variable(variable))
  {
    for (double v = start; v <= stop + 0.5 * step; v += step)
      if (std::abs(v - std::lround(v)) > 1e-9)
        throw std::invalid_argument(
            "sweep: this variable takes whole-number grid points");
  }
}

SweepSpec parse_sweep_spec(const std::string& text)
{
  auto equals = text.find('=');
  if (equals == std::string::npos)
    throw std::invalid_argument(
        "sweep: expected var=start:stop:step, got '" + text + "'");

  std::string name = text.substr(0, equals);
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

  SweepSpec spec;
  if (name == "b")
    spec.variable = SweepVariable::group_size;
  else if (name == "kprime" || name == "k_prime")
    spec.variable = SweepVariable::subgroup_count;
  else if (name == "p" || name == "p-dbm" || name == "p_dbm")
    spec.variable = SweepVariable::power_dbm;
  else if (name == "tc" || name == "t_c")
    spec.variable = SweepVariable::frame_symbols;
  else
    throw std::invalid_argument("sweep: unknown variable '" + name
                                + "' (expected b, kprime, p or tc)");

  std::string range = text.substr(equals + 1);
  double start = 0.0, stop = 0.0, step = 0.0;
  if (std::sscanf(range.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3)
    throw std::invalid_argument(
        "sweep: expected start:stop:step after '=', got '" + range + "'");
  spec.start = start;
  spec.stop = stop;
  spec.step = step;
  spec.validate();
  return spec;
}

bool is_rate_sweep(SweepVariable variable)
{
  return variable == SweepVariable::group_size
         || variable == SweepVariable::subgroup_count;
}

SystemParams ExperimentConfig::make_params(int group_size_override) const
{
  return make_system_params(geometry, path_loss, surface_elements,
                            group_size_override, frame_symbols,
                            pilot_power_dbm, data_power_dbm, noise_dbm);
}

namespace
{

// A grid point is reported, feasible or not; this builds the row skeleton
// and decides whether the measurements can run.
struct PointPlan
{
  int group_size = 0;
  bool feasible = false;
};

PointPlan plan_rate_point(const ExperimentConfig& config, SweepVariable variable,
                          double value)
{
  PointPlan plan;
  if (variable == SweepVariable::group_size)
  {
    plan.group_size = to_int(value);
  }
  else
  {
    // Requested subgroup count; realize it as B = floor(K / K'). The actual
    // K' can exceed the request when K/B does not divide evenly.
    int requested = to_int(value);
    if (requested < 1 || requested > config.surface_elements)
      return plan;
    plan.group_size = config.surface_elements / requested;
  }
  if (plan.group_size < 1 || plan.group_size > config.surface_elements)
    return plan;

  SystemParams probe;
  probe.surface_elements = config.surface_elements;
  probe.group_size = plan.group_size;
  probe.frame_symbols = config.frame_symbols;
  plan.feasible = probe.overhead_prefactor() > 0.0;
  return plan;
}

}  // namespace

std::vector<RateSweepRow> run_rate_sweep(const ExperimentConfig& config)
{
  if (!config.sweep || !is_rate_sweep(config.sweep->variable))
    throw std::invalid_argument(
        "run_rate_sweep: needs a group-size or subgroup-count sweep");

  std::vector<RateSweepRow> rows;
  for (double value : config.sweep->grid())
  {
    RateSweepRow row;
    PointPlan plan = plan_rate_point(config, config.sweep->variable, value);
    row.group_size = plan.group_size;
    if (!plan.feasible)
    {
      row.skipped = true;
      rows.push_back(row);
      continue;
    }

    SystemParams params = config.make_params(plan.group_size);
    row.subgroup_count = params.subgroup_count();
    row.pilot_overhead = params.pilot_symbols();
    RateResult rate = mc_achievable_rate(params, config.trials, config.seed,
                                         config.workers);
    row.mc_rate = rate.rate_bps_hz;
    row.mc_stderr = rate.stderr_bps_hz;
    row.upper_bound = rate_upper_bound(params);

    if (config.include_onoff)
    {
      // Match the baseline's pilot budget to the grouped scheme by letting it
      // keep exactly K' elements on.
      RateResult onoff = mc_onoff_rate(params, params.subgroup_count(),
                                       config.trials, config.seed,
                                       config.workers);
      row.onoff_rate = onoff.rate_bps_hz;
      row.onoff_stderr = onoff.stderr_bps_hz;
    }
    if (config.include_perfect)
    {
      RateResult perfect = mc_perfect_csi_rate(params, config.trials,
                                               config.seed, config.workers);
      row.perfect_rate = perfect.rate_bps_hz;
      row.perfect_stderr = perfect.stderr_bps_hz;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<OptimumSweepRow> run_optimum_sweep(const ExperimentConfig& config)
{
  if (!config.sweep || is_rate_sweep(config.sweep->variable))
    throw std::invalid_argument(
        "run_optimum_sweep: needs a power or frame-length sweep");

  std::vector<OptimumSweepRow> rows;
  for (double value : config.sweep->grid())
  {
    ExperimentConfig point = config;
    if (config.sweep->variable == SweepVariable::power_dbm)
      point.data_power_dbm = value;
    else
      point.frame_symbols = to_int(value);

    OptimumSweepRow row;
    row.sweep_value = value;
    // No group size is feasible only when the frame cannot even fit one
    // subgroup's pilots; report the point as skipped rather than aborting
    // the whole sweep.
    try
    {
      SystemParams params = point.make_params(point.surface_elements);
      GroupSizeResult brute = optimal_group_brute_force(params);
      GroupSizeResult closed = optimal_group_closed_form(params);
      row.b_star_brute = brute.group_size;
      row.b_star_closed = closed.group_size;
      row.rbar_brute = brute.rate_bound;
      row.rbar_closed = closed.rate_bound;
      row.rbar_ratio = closed.rate_bound / brute.rate_bound;
    }
    catch (const std::invalid_argument&)
    {
      row.skipped = true;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_value(double value)
{
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

namespace
{

void append_optional(std::string& line, const std::optional<double>& value)
{
  line += ',';
  if (value)
    line += format_value(*value);
}

void append_json_optional(std::string& line, const char* key,
                          const std::optional<double>& value)
{
  line += ",\"";
  line += key;
  line += "\":";
  line += value ? format_value(*value) : "null";
}

}  // namespace

void write_rate_sweep(std::ostream& out, const std::vector<RateSweepRow>& rows,
                      const ExperimentConfig& config)
{
  if (config.format == OutputFormat::csv)
  {
    std::string header = "B,K_prime,pilot_overhead,mc_rate,mc_stderr,upper_bound";
    if (config.include_onoff)
      header += ",onoff_rate,onoff_stderr";
    if (config.include_perfect)
      header += ",perfect_rate,perfect_stderr";
    header += ",skipped";
    out << header << '\n';
    for (const auto& row : rows)
    {
      std::string line = std::to_string(row.group_size);
      if (row.skipped)
      {
        line += ",,,,,";
        if (config.include_onoff)
          line += ",,";
        if (config.include_perfect)
          line += ",,";
        line += ",1";
      }
      else
      {
        line += ',' + std::to_string(row.subgroup_count);
        line += ',' + std::to_string(row.pilot_overhead);
        line += ',' + format_value(row.mc_rate);
        line += ',' + format_value(row.mc_stderr);
        line += ',' + format_value(row.upper_bound);
        if (config.include_onoff)
        {
          append_optional(line, row.onoff_rate);
          append_optional(line, row.onoff_stderr);
        }
        if (config.include_perfect)
        {
          append_optional(line, row.perfect_rate);
          append_optional(line, row.perfect_stderr);
        }
        line += ",0";
      }
      out << line << '\n';
    }
    return;
  }

  for (const auto& row : rows)
  {
    std::string line = "{\"B\":" + std::to_string(row.group_size);
    if (row.skipped)
    {
      line += ",\"K_prime\":null,\"pilot_overhead\":null,\"mc_rate\":null,"
              "\"mc_stderr\":null,\"upper_bound\":null";
      if (config.include_onoff)
        line += ",\"onoff_rate\":null,\"onoff_stderr\":null";
      if (config.include_perfect)
        line += ",\"perfect_rate\":null,\"perfect_stderr\":null";
      line += ",\"skipped\":true}";
    }
    else
    {
      line += ",\"K_prime\":" + std::to_string(row.subgroup_count);
      line += ",\"pilot_overhead\":" + std::to_string(row.pilot_overhead);
      line += ",\"mc_rate\":" + format_value(row.mc_rate);
      line += ",\"mc_stderr\":" + format_value(row.mc_stderr);
      line += ",\"upper_bound\":" + format_value(row.upper_bound);
      if (config.include_onoff)
      {
        append_json_optional(line, "onoff_rate", row.onoff_rate);
        append_json_optional(line, "onoff_stderr", row.onoff_stderr);
      }
      if (config.include_perfect)
      {
        append_json_optional(line, "perfect_rate", row.perfect_rate);
        append_json_optional(line, "perfect_stderr", row.perfect_stderr);
      }
      line += ",\"skipped\":false}";
    }
    out << line << '\n';
  }
}

void write_optimum_sweep(std::ostream& out,
                         const std::vector<OptimumSweepRow>& rows,
                         const ExperimentConfig& config)
{
  if (config.format == OutputFormat::csv)
  {
    out << "sweep_value,b_star_brute,b_star_closed,rbar_brute,rbar_closed,"
           "rbar_ratio,skipped\n";
    for (const auto& row : rows)
    {
      std::string line = format_value(row.sweep_value);
      if (row.skipped)
      {
        line += ",,,,,,1";
      }
      else
      {
        line += ',' + std::to_string(row.b_star_brute);
        line += ',' + std::to_string(row.b_star_closed);
        line += ',' + format_value(row.rbar_brute);
        line += ',' + format_value(row.rbar_closed);
        line += ',' + format_value(row.rbar_ratio);
        line += ",0";
      }
      out << line << '\n';
    }
    return;
  }

  for (const auto& row : rows)
  {
    std::string line = "{\"sweep_value\":" + format_value(row.sweep_value);
    if (row.skipped)
    {
      line += ",\"b_star_brute\":null,\"b_star_closed\":null,"
              "\"rbar_brute\":null,\"rbar_closed\":null,\"rbar_ratio\":null,"
              "\"skipped\":true}";
    }
    else
    {
      line += ",\"b_star_brute\":" + std::to_string(row.b_star_brute);
      line += ",\"b_star_closed\":" + std::to_string(row.b_star_closed);
      line += ",\"rbar_brute\":" + format_value(row.rbar_brute);
      line += ",\"rbar_closed\":" + format_value(row.rbar_closed);
      line += ",\"rbar_ratio\":" + format_value(row.rbar_ratio);
      line += ",\"skipped\":false}";
    }
    out << line << '\n';
  }
}

}  // namespace risgroup
