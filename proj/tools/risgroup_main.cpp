// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: single-point rate/bound evaluation, group-size
// optimization, figure-style sweep datasets and internal self-checks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "risgroup/experiment.hpp"
#include "risgroup/optimizer.hpp"
#include "risgroup/rate.hpp"
#include "risgroup/selftest.hpp"

namespace
{

using namespace risgroup;

void print_field(std::ostream& out, const char* name, double value)
{
  out << name << ": " << format_value(value) << '\n';
}

void print_field(std::ostream& out, const char* name, long value)
{
  out << name << ": " << value << '\n';
}

int run_rate(std::ostream& out, const ExperimentConfig& config)
{
  SystemParams params = config.make_params();
  RateResult rate
      = mc_achievable_rate(params, config.trials, config.seed, config.workers);
  print_field(out, "B", static_cast<long>(params.group_size));
  print_field(out, "K_prime", static_cast<long>(params.subgroup_count()));
  print_field(out, "pilot_overhead", static_cast<long>(params.pilot_symbols()));
  print_field(out, "prefactor", rate.prefactor);
  print_field(out, "trials", rate.trials);
  print_field(out, "mc_rate", rate.rate_bps_hz);
  print_field(out, "mc_stderr", rate.stderr_bps_hz);
  print_field(out, "upper_bound", rate_upper_bound(params));
  if (config.include_onoff)
  {
    RateResult onoff = mc_onoff_rate(params, params.subgroup_count(),
                                     config.trials, config.seed, config.workers);
    print_field(out, "onoff_rate", onoff.rate_bps_hz);
    print_field(out, "onoff_stderr", onoff.stderr_bps_hz);
  }
  if (config.include_perfect)
  {
    RateResult perfect = mc_perfect_csi_rate(params, config.trials, config.seed,
                                             config.workers);
    print_field(out, "perfect_rate", perfect.rate_bps_hz);
    print_field(out, "perfect_stderr", perfect.stderr_bps_hz);
  }
  return 0;
}

int run_bound(std::ostream& out, const ExperimentConfig& config)
{
  SystemParams params = config.make_params();
  print_field(out, "B", static_cast<long>(params.group_size));
  print_field(out, "K_prime", static_cast<long>(params.subgroup_count()));
  print_field(out, "prefactor", params.overhead_prefactor());
  print_field(out, "upper_bound", rate_upper_bound(params));
  return 0;
}

int run_optimize(std::ostream& out, const ExperimentConfig& config)
{
  SystemParams params = config.make_params(1);
  GroupSizeResult brute = optimal_group_brute_force(params);
  GroupSizeResult closed = optimal_group_closed_form(params);
  GroupSizeResult alt = optimal_group_alt_form(params);
  print_field(out, "b_star_brute", static_cast<long>(brute.group_size));
  print_field(out, "k_prime_brute", static_cast<long>(brute.subgroup_count));
  print_field(out, "rbar_brute", brute.rate_bound);
  print_field(out, "b_star_closed", static_cast<long>(closed.group_size));
  print_field(out, "k_prime_closed", static_cast<long>(closed.subgroup_count));
  print_field(out, "rbar_closed", closed.rate_bound);
  print_field(out, "b_star_closed_alt", static_cast<long>(alt.group_size));
  print_field(out, "rbar_ratio", closed.rate_bound / brute.rate_bound);
  return 0;
}

int run_sweep(std::ostream& out, const ExperimentConfig& config)
{
  if (!config.sweep)
    throw std::invalid_argument(
        "sweep: pass --sweep var=start:stop:step (var in {b, kprime, p, tc})");
  if (is_rate_sweep(config.sweep->variable))
    write_rate_sweep(out, run_rate_sweep(config), config);
  else
    write_optimum_sweep(out, run_optimum_sweep(config), config);
  return 0;
}

int run_fit(std::ostream& out, int max_group_size)
{
  PowerFit free_fit = fit_z_power(max_group_size);
  PowerFit pinned_fit = fit_z_power(max_group_size, 0.5);
  print_field(out, "b_max", static_cast<long>(max_group_size));
  print_field(out, "kappa_free", free_fit.coefficient);
  print_field(out, "eta_free", free_fit.exponent);
  print_field(out, "residual_free", free_fit.log_rms_residual);
  print_field(out, "kappa_sqrt", pinned_fit.coefficient);
  print_field(out, "residual_sqrt", pinned_fit.log_rms_residual);
  print_field(out, "kappa_sqrt_squared",
              pinned_fit.coefficient * pinned_fit.coefficient);
  print_field(out, "zeta_over_beta",
              ClosedFormConstants::from_fit(max_group_size).zeta_over_beta);
  return 0;
}

int run_selftest(std::ostream& out, const ExperimentConfig& config)
{
  auto checks = moment_identity_checks(config.trials, config.seed, config.workers);
  auto lambert = lambert_residual_checks();
  checks.insert(checks.end(), lambert.begin(), lambert.end());
  auto estimation = estimation_roundtrip_checks(config.seed);
  checks.insert(checks.end(), estimation.begin(), estimation.end());
  return report_checks(out, checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Reflecting-surface element grouping: channel estimation "
               "overhead vs beamforming gain"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file mirroring the flag names");

  ExperimentConfig config;
  std::string sweep_text;
  std::string format_text = "csv";
  std::string out_path;
  int max_group_size = 64;

  app.add_option("--k", config.surface_elements, "Surface elements")
      ->check(CLI::PositiveNumber);
  app.add_option("--b", config.group_size, "Elements per group")
      ->check(CLI::PositiveNumber);
  app.add_option("--tc", config.frame_symbols, "Symbols per coherence frame")
      ->check(CLI::PositiveNumber);
  app.add_option("--p-dbm", config.data_power_dbm, "Data transmit power [dBm]");
  app.add_option("--ptr-dbm", config.pilot_power_dbm,
                 "Pilot transmit power [dBm]");
  app.add_option("--noise-dbm", config.noise_dbm, "Noise power [dBm]");
  app.add_option("--d0", config.geometry.source_surface_m,
                 "Source-surface distance [m]");
  app.add_option("--d", config.geometry.source_destination_m,
                 "Source-destination distance [m]");
  app.add_option("--dv", config.geometry.destination_offset_m,
                 "Destination offset from the source-surface axis [m]");
  app.add_option("--c0-db", config.path_loss.reference_db,
                 "Path loss at the 1 m reference [dB]");
  app.add_option("--alpha-direct", config.path_loss.direct_exponent,
                 "Path loss exponent, direct link");
  app.add_option("--alpha-cascaded", config.path_loss.cascaded_exponent,
                 "Path loss exponent, reflected link");
  app.add_option("--trials", config.trials, "Monte-Carlo trials")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Master seed for all randomness");
  app.add_option("--workers", config.workers, "Worker threads for trials")
      ->check(CLI::PositiveNumber);
  app.add_option("--sweep", sweep_text,
                 "Sweep spec var=start:stop:step (var in {b, kprime, p, tc})");
  app.add_flag("--onoff", config.include_onoff,
               "Add the on-off baseline to rate outputs");
  app.add_flag("--perfect", config.include_perfect,
               "Add the perfect-CSI reference to rate outputs");
  app.add_option("--out", out_path, "Write output here instead of stdout");
  app.add_option("--format", format_text, "Dataset format")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  auto* rate_cmd
      = app.add_subcommand("rate", "Net achievable rate at one operating point");
  auto* bound_cmd
      = app.add_subcommand("bound", "Closed-form rate upper bound");
  auto* optimize_cmd = app.add_subcommand(
      "optimize", "Optimal group size, brute force and closed form");
  auto* sweep_cmd
      = app.add_subcommand("sweep", "Figure-style dataset over a grid");
  auto* fit_cmd = app.add_subcommand(
      "fit-z", "Power-law fit of the grouped-amplitude curve");
  fit_cmd->add_option("--bmax", max_group_size,
                      "Largest group size in the fit")
      ->check(CLI::PositiveNumber);
  auto* selftest_cmd
      = app.add_subcommand("selftest", "Internal consistency checks");
  for (auto* sub :
       {rate_cmd, bound_cmd, optimize_cmd, sweep_cmd, fit_cmd, selftest_cmd})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try
  {
    config.format = format_text == "csv" ? OutputFormat::csv : OutputFormat::jsonl;
    if (!sweep_text.empty())
      config.sweep = parse_sweep_spec(sweep_text);

    std::ofstream file;
    if (!out_path.empty())
    {
      file.open(out_path);
      if (!file)
        throw std::runtime_error("cannot open output file '" + out_path + "'");
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    int status = 0;
    if (rate_cmd->parsed())
      status = run_rate(out, config);
    else if (bound_cmd->parsed())
      status = run_bound(out, config);
    else if (optimize_cmd->parsed())
      status = run_optimize(out, config);
    else if (sweep_cmd->parsed())
      status = run_sweep(out, config);
    else if (fit_cmd->parsed())
      status = run_fit(out, max_group_size);
    else if (selftest_cmd->parsed())
      status = run_selftest(out, config);

    out.flush();
    if (!out_path.empty() && !file)
      throw std::runtime_error("failed writing output file '" + out_path + "'");
    return status;
  }
  catch (const std::exception& error)
  {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }
}
