// SPDX-License-Identifier: Apache-2.0
#include "risgroup/mc.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace risgroup
{

McSummary run_deterministic_mc(long trials, int workers,
                               const std::function<double(long)>& trial_value)
{
  if (trials < 1)
    throw std::invalid_argument("run_deterministic_mc: need at least one trial");
  if (workers < 1)
    throw std::invalid_argument("run_deterministic_mc: need at least one worker");

  std::vector<double> samples(static_cast<std::size_t>(trials));

  workers = static_cast<int>(std::min<long>(workers, trials));
  if (workers == 1)
  {
    for (long t = 0; t < trials; ++t)
      samples[static_cast<std::size_t>(t)] = trial_value(t);
  }
  else
  {
    // Contiguous index blocks per worker; each writes only its own slice, so
    // no synchronization is needed and the buffer contents do not depend on
    // scheduling. The first worker exception wins and is rethrown here.
    std::exception_ptr failure;
    std::mutex failure_mutex;
    long chunk = (trials + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
    {
      long begin = w * chunk;
      long end = std::min(trials, begin + chunk);
      if (begin >= end)
        break;
      pool.emplace_back(
          [&, begin, end]
          {
            try
            {
              for (long t = begin; t < end; ++t)
                samples[static_cast<std::size_t>(t)] = trial_value(t);
            }
            catch (...)
            {
              std::lock_guard<std::mutex> lock(failure_mutex);
              if (!failure)
                failure = std::current_exception();
            }
          });
    }
    for (auto& thread : pool)
      thread.join();
    if (failure)
      std::rethrow_exception(failure);
  }

  // Serial, index-ordered reduction keeps the result bit-identical across
  // worker counts.
  double sum = 0.0;
  for (double sample : samples)
    sum += sample;
  double mean = sum / static_cast<double>(trials);

  McSummary summary;
  summary.mean = mean;
  summary.trials = trials;
  if (trials > 1)
  {
    double squared = 0.0;
    for (double sample : samples)
      squared += (sample - mean) * (sample - mean);
    summary.stddev = std::sqrt(squared / static_cast<double>(trials - 1));
    summary.stderr_mean = summary.stddev / std::sqrt(static_cast<double>(trials));
  }
  return summary;
}

}  // namespace risgroup
