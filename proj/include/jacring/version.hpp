#ifndef JACRING_VERSION_HPP
#define JACRING_VERSION_HPP

namespace jacring {

// Bumping this invalidates every on-disk cache entry.
inline constexpr const char* kEngineVersion = "1.0.0";

}  // namespace jacring

#endif
