// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace risgroup
{

/*!
 * Mix a master seed and a stream index into one well-scrambled 64-bit seed
 * (splitmix64 finalizer). Distinct indices give statistically independent
 * streams for the same master seed.
 */
std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t stream_index);

/*!
 * Random source for one Monte-Carlo trial.
 *
 * Each trial owns an engine seeded by (master_seed, trial_index), so trial t
 * draws the same numbers no matter which thread runs it or how many trials
 * run in total. Gaussian variates come from an explicit Box-Muller transform
 * on 53-bit uniforms rather than std::normal_distribution, whose algorithm
 * (and therefore output) is implementation-defined.
 */
class TrialRng
{
public:
  TrialRng(std::uint64_t master_seed, std::uint64_t stream_index);

  //! Uniform draw in [0, 1) with 53 random bits.
  double uniform();

  //! Circularly-symmetric complex Gaussian with unit total variance
  //! (real and imaginary parts each N(0, 1/2)).
  std::complex<double> complex_normal();

private:
  std::mt19937_64 engine_;
};

}  // namespace risgroup
