#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace lpg {

/// Wall-clock limit; a non-positive duration means unlimited.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(double seconds) {
    if (seconds > 0) {
      active_ = true;
      end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    }
  }
  bool expired() const { return active_ && std::chrono::steady_clock::now() >= end_; }

 private:
  bool active_ = false;
  std::chrono::steady_clock::time_point end_{};
};

/// Thrown internally when a resource limit is hit; callers convert to partial results.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpg
