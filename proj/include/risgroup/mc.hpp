// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

namespace risgroup
{

//! Sample statistics of a Monte-Carlo run, reduced in index order.
struct McSummary
{
  double mean = 0.0;
  double stddev = 0.0;        //!< sample standard deviation (n - 1 divisor)
  double stderr_mean = 0.0;   //!< stddev / sqrt(n)
  long trials = 0;
};

/*!
 * Evaluate `trial_value(t)` for t = 0..trials-1 and reduce to mean/stddev.
 *
 * Workers fill disjoint contiguous index ranges of one preallocated buffer
 * and the reduction runs serially in index order afterwards, so the result
 * is bit-identical for every worker count. `trial_value` must therefore
 * depend only on its index (seed per-trial generators from it) and must be
 * safe to call concurrently. Exceptions thrown by a worker are rethrown on
 * the calling thread.
 */
McSummary run_deterministic_mc(long trials, int workers,
                               const std::function<double(long)>& trial_value);

}  // namespace risgroup
