// SPDX-License-Identifier: Apache-2.0
#include "risgroup/rng.hpp"

#include <cmath>
#include <numbers>

namespace risgroup
{

std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t stream_index)
{
  // splitmix64: advance by the golden-gamma multiple of the index, then
  // apply the finalizer. Index 0 and master_seed alone must not collide,
  // hence the +1.
  std::uint64_t x = master_seed + 0x9E3779B97F4A7C15ULL * (stream_index + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t stream_index)
    : engine_(mix_seed(master_seed, stream_index))
{
}

double TrialRng::uniform()
{
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::complex<double> TrialRng::complex_normal()
{
  // Box-Muller in polar form. |z|^2 for CN(0,1) is Exp(1), so the radius is
  // sqrt(-log u) with u in (0, 1]; 1 - uniform() keeps the log finite.
  double radius = std::sqrt(-std::log(1.0 - uniform()));
  double angle = 2.0 * std::numbers::pi * uniform();
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace risgroup
