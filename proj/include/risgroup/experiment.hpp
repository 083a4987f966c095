// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "risgroup/linkbudget.hpp"

namespace risgroup
{

//! Quantity varied along a sweep.
enum class SweepVariable
{
  group_size,      //!< "b": rate vs B at fixed everything else
  subgroup_count,  //!< "kprime": rate vs requested K' (B derived as floor(K/K'))
  power_dbm,       //!< "p": optimal group size vs transmit power
  frame_symbols,   //!< "tc": optimal group size vs frame length
};

/*!
 * Inclusive arithmetic grid VAR = start, start+step, ..., stop. Integer
 * variables require whole-number grid points. Parsed from the textual form
 * "var=start:stop:step" with var in {b, kprime, p, tc}.
 */
struct SweepSpec
{
  SweepVariable variable = SweepVariable::group_size;
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> grid() const;
  void validate() const;
};

SweepSpec parse_sweep_spec(const std::string& text);

enum class OutputFormat
{
  csv,
  jsonl,
};

//! Whole experiment description: operating point, trial budget and outputs.
struct ExperimentConfig
{
  Geometry geometry{};
  PathLossModel path_loss{};

  int surface_elements = 360;
  int group_size = 1;
  int frame_symbols = 900;
  double data_power_dbm = 0.0;
  double pilot_power_dbm = 0.0;
  double noise_dbm = -80.0;

  long trials = 10000;
  std::uint64_t seed = 1;
  int workers = 1;

  bool include_onoff = false;    //!< add on-off baseline columns to rate sweeps
  bool include_perfect = false;  //!< add perfect-CSI columns to rate sweeps

  std::optional<SweepSpec> sweep;
  OutputFormat format = OutputFormat::csv;

  //! SystemParams at this operating point with the given group size.
  SystemParams make_params(int group_size_override) const;
  SystemParams make_params() const { return make_params(group_size); }
};

/*!
 * One grid point of a rate sweep. Points whose configuration is infeasible
 * (group size beyond K, or a frame too short for the pilot phase) are kept
 * in the output with `skipped` set and the measurement fields blank.
 */
struct RateSweepRow
{
  int group_size = 0;      //!< B column (derived from the grid for K' sweeps)
  int subgroup_count = 0;  //!< K_prime column, floor(K/B)
  int pilot_overhead = 0;  //!< K_prime + 1
  double mc_rate = 0.0;
  double mc_stderr = 0.0;
  double upper_bound = 0.0;
  std::optional<double> onoff_rate;
  std::optional<double> onoff_stderr;
  std::optional<double> perfect_rate;
  std::optional<double> perfect_stderr;
  bool skipped = false;
};

//! One grid point of an optimal-group-size sweep (brute force vs closed form).
struct OptimumSweepRow
{
  double sweep_value = 0.0;
  int b_star_brute = 0;
  int b_star_closed = 0;
  double rbar_brute = 0.0;
  double rbar_closed = 0.0;
  double rbar_ratio = 0.0;  //!< rbar_closed / rbar_brute
  bool skipped = false;
};

//! Evaluate a group-size or subgroup-count sweep. Requires a matching spec.
std::vector<RateSweepRow> run_rate_sweep(const ExperimentConfig& config);

//! Evaluate a power or frame-length sweep of the two optimizers.
std::vector<OptimumSweepRow> run_optimum_sweep(const ExperimentConfig& config);

/*!
 * Serialize rows with a fixed column order and fixed float formatting
 * ("%.12g"), so equal inputs produce byte-identical files. Optional columns
 * appear only when enabled in the config; skipped rows leave measurement
 * fields empty (CSV) or null (JSONL).
 */
void write_rate_sweep(std::ostream& out, const std::vector<RateSweepRow>& rows,
                      const ExperimentConfig& config);
void write_optimum_sweep(std::ostream& out,
                         const std::vector<OptimumSweepRow>& rows,
                         const ExperimentConfig& config);

//! True for the sweep variables reported as rate sweeps (b, kprime).
bool is_rate_sweep(SweepVariable variable);

//! Fixed-precision float formatting used in all emitted files.
std::string format_value(double value);

}  // namespace risgroup
