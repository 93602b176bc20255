#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>

namespace pqwpa {

// All simulated time is kept in integer nanoseconds so per-entity sums are
// exact.
using Duration = std::chrono::nanoseconds;

using Bytes = std::uint64_t;
using Cycles = std::uint64_t;

inline Duration from_micros(double us) {
  return Duration(static_cast<Duration::rep>(std::llround(us * 1e3)));
}

inline double to_micros(Duration d) { return static_cast<double>(d.count()) / 1e3; }
inline double to_millis(Duration d) { return static_cast<double>(d.count()) / 1e6; }

}  // namespace pqwpa
