#pragma once

#include <cstdlib>
#include <string>

namespace groupoidal::config {

// Desk-scale guards. Relation ops are cheap up to these sizes; exhaustive
// ideal enumeration is exponential and gets its own, much smaller, guard.
inline constexpr int kRelationMaxN = 64;
inline constexpr int kTowerMaxSize = 128;
inline constexpr int kTowerMaxDepth = 6;
inline constexpr int kEnumerationDefaultN = 8;
inline constexpr long long kWordSpaceMaxPoints = 128;
inline constexpr std::size_t kDownSetCap = std::size_t{1} << 20;

// GROUPOIDAL_MAX_SIZE overrides the enumeration guard.
inline int enumeration_bound() {
  static const int bound = [] {
    if (const char* env = std::getenv("GROUPOIDAL_MAX_SIZE")) {
      try {
        int v = std::stoi(env);
        if (v > 0) return v;
      } catch (...) {
      }
    }
    return kEnumerationDefaultN;
  }();
  return bound;
}

}  // namespace groupoidal::config
