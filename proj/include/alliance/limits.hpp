#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>

#include "alliance/errors.hpp"

namespace alliance {

/// Order caps for the exponential parts of the library.
struct Limits {
  std::size_t brute_force = 20;   // subset-scan oracle and domination number
  std::size_t branch_bound = 32;  // branch-and-bound solver
  std::size_t canonical = 16;     // canonical labeling
  std::size_t trees = 14;         // free tree enumeration
  std::size_t unicyclic = 12;     // unicyclic enumeration
  std::size_t family_g = 14;      // enumerate_g

  static constexpr std::size_t kHardMax = 62;

  static Limits defaults() { return {}; }

  /// Defaults, with every cap replaced by ALLIANCE_LAB_MAX_N when that variable is set.
  static Limits from_environment() {
    Limits limits;
    if (const char* raw = std::getenv("ALLIANCE_LAB_MAX_N"); raw != nullptr && *raw != '\0') {
      char* end = nullptr;
      const unsigned long value = std::strtoul(raw, &end, 10);
      if (end == raw || *end != '\0' || value == 0) {
        throw InputError("ALLIANCE_LAB_MAX_N must be a positive integer, got '" + std::string(raw) + "'");
      }
      const std::size_t cap = std::min<std::size_t>(value, kHardMax);
      limits.brute_force = limits.branch_bound = limits.canonical = cap;
      limits.trees = limits.unicyclic = limits.family_g = cap;
    }
    return limits;
  }
};

inline void require_order_within(std::size_t order, std::size_t limit, const char* what) {
  if (order > limit) throw CapabilityError(what, order, limit);
}

}  // namespace alliance
