#pragma once

#include <cstdint>

namespace hooklab {

// Upper bound on exhaustive enumerations (arrangement spaces, tableau counts).
// Defaults to 5'000'000; HOOKLAB_MAX_ENUM overrides it.
std::uint64_t max_enumeration();

inline constexpr std::uint64_t kDefaultSeed = 20240607;

}  // namespace hooklab
