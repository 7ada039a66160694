//
// Copyright 2026 The dpot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DPOT_HARNESS_TRIAL_RUNNER_H_
#define DPOT_HARNESS_TRIAL_RUNNER_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "dpot/core/random_stream.h"

namespace dpot {

// 0 means "all available cores".
unsigned resolve_threads(unsigned requested);

// Runs trials 0..trials-1 and merges per-worker accumulators.
//
// Trial t draws only from root.derive(label, t), and Counters::merge must be
// associative and commutative (integer counts), so the result does not depend
// on the number of workers or on scheduling. The first exception thrown by
// any trial is rethrown after all workers stop.
template <typename Counters, typename TrialFn>
Counters run_trials(std::uint64_t trials, const RandomStream& root,
                    const std::string& label, unsigned threads,
                    const Counters& zero, TrialFn&& trial) {
  constexpr std::uint64_t kChunk = 64;
  const unsigned workers = static_cast<unsigned>(std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(resolve_threads(threads),
                                 (trials + kChunk - 1) / kChunk)));
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<Counters> partial(workers, zero);

  auto work = [&](unsigned w) {
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= trials) break;
        const std::uint64_t end = std::min(trials, begin + kChunk);
        for (std::uint64_t t = begin; t < end; ++t) {
          RandomStream stream = root.derive(label, t);
          trial(t, stream, partial[w]);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      failed.store(true);
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  Counters total = zero;
  for (const Counters& c : partial) total.merge(c);
  return total;
}

}  // namespace dpot

#endif  // DPOT_HARNESS_TRIAL_RUNNER_H_
