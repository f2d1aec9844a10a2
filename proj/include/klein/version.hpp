#pragma once

namespace klein {

// Bumped whenever a change could alter any emitted coefficient; cache keys
// embed this string so stale entries are never replayed.
inline constexpr const char* version = "0.1.0";

}  // namespace klein
