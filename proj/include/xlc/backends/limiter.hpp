#pragma once

#include <condition_variable>
#include <mutex>

namespace xlc::backends {

// Process-global cap on concurrently in-flight remote calls. Tracks the
// high-water mark so tests can assert the bound was honored.
class ParallelismLimiter {
 public:
  explicit ParallelismLimiter(int max_inflight) : max_(max_inflight) {}

  class Ticket {
   public:
    explicit Ticket(ParallelismLimiter& l) : limiter_(l) { limiter_.acquire(); }
    ~Ticket() { limiter_.release(); }
    Ticket(const Ticket&) = delete;
    Ticket& operator=(const Ticket&) = delete;

   private:
    ParallelismLimiter& limiter_;
  };

  int max_observed() const {
    std::lock_guard lk(mu_);
    return max_observed_;
  }

 private:
  void acquire() {
    std::unique_lock lk(mu_);
    cv_.wait(lk, [&] { return inflight_ < max_; });
    ++inflight_;
    if (inflight_ > max_observed_) max_observed_ = inflight_;
  }

  void release() {
    {
      std::lock_guard lk(mu_);
      --inflight_;
    }
    cv_.notify_one();
  }

  mutable std::mutex mu_;
  std::condition_variable cv_;
  int max_;
  int inflight_ = 0;
  int max_observed_ = 0;
};

}  // namespace xlc::backends
