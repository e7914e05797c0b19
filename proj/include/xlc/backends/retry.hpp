#pragma once

#include <chrono>
#include <functional>
#include <thread>

#include "xlc/backends/backend.hpp"
#include "xlc/core/rng.hpp"

namespace xlc::backends {

struct RetryPolicy {
  int max_attempts = 3;
  double base_delay_ms = 200.0;
  double max_delay_ms = 5000.0;
};

// Runs fn up to max_attempts times. Exponential backoff with jitter;
// rate-limit responses honor the provider-supplied delay when present.
// UnsupportedPair is never retried.
template <typename Fn>
auto with_retries(const RetryPolicy& policy, std::uint64_t jitter_seed, Fn&& fn)
    -> decltype(fn()) {
  core::Rng rng(jitter_seed);
  double delay = policy.base_delay_ms;
  for (int attempt = 1;; ++attempt) {
    try {
      return fn();
    } catch (const UnsupportedPair&) {
      throw;
    } catch (const RateLimited& e) {
      if (attempt >= policy.max_attempts) throw;
      double wait = e.retry_after_s > 0.0 ? e.retry_after_s * 1000.0 : delay;
      std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(wait));
    } catch (const BackendError&) {
      if (attempt >= policy.max_attempts) throw;
      double jitter = 0.5 + rng.next_double();  // 0.5x .. 1.5x
      std::this_thread::sleep_for(
          std::chrono::duration<double, std::milli>(delay * jitter));
    }
    delay = std::min(delay * 2.0, policy.max_delay_ms);
  }
}

}  // namespace xlc::backends
