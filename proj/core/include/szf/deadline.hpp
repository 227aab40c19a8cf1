#pragma once

#include <atomic>
#include <chrono>
#include <optional>

#include "szf/error.hpp"

namespace szf {

/// Wall-clock budget shared by a search and its workers. A default-constructed
/// deadline never expires.
class Deadline {
 public:
  using clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget) : at_(clock::now() + budget) {}

  static Deadline after_seconds(double seconds) {
    if (seconds <= 0) return Deadline{};
    return Deadline(std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0)));
  }

  bool expired() const { return at_ && clock::now() >= *at_; }
  void check() const {
    if (expired()) throw Timeout();
  }

 private:
  std::optional<clock::time_point> at_;
};

}  // namespace szf
