#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace monodromy {

inline constexpr std::size_t kDefaultCellCap = 1'000'000;

// Size cap for vertex/cell counts. MONODROMY_CELL_CAP overrides the default
// when it parses as a positive integer.
inline std::size_t cell_cap() {
  if (const char* env = std::getenv("MONODROMY_CELL_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCellCap;
}

}  // namespace monodromy
