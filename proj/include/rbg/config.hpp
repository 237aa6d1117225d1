#pragma once

#include <cstddef>

namespace rbg {

/// Process-wide limits. Initialised from the environment (RBG_ORDER_CAP,
/// RBG_THREADS) on first access; set before spawning any work.
struct Config {
  std::size_t order_cap = 2048;
  std::size_t brute_force_cap = 8;
  /// Largest group for which extension questions left open by the closure
  /// test are settled by a complete census.
  std::size_t census_fallback_cap = 120;
  unsigned threads = 1;
};

Config& config();

/// Throws order_cap_exceeded when `order` is above the configured cap.
void check_order_cap(std::size_t order, const char* what);

}  // namespace rbg
