#include "pathpair/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace pathpair {

std::size_t effective_cap(std::size_t default_cap) {
  const char* raw = std::getenv(kCapOverrideEnv);
  if (raw == nullptr) return default_cap;
  std::size_t value = 0;
  auto end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return default_cap;
  return value > default_cap ? value : default_cap;
}

void enforce_cap(const std::string& what, std::size_t size, std::size_t default_cap) {
  auto cap = effective_cap(default_cap);
  if (size > cap) {
    throw CapExceeded(what + ": size " + std::to_string(size) + " exceeds cap " +
                      std::to_string(cap) + " (set " + kCapOverrideEnv + " to raise it)");
  }
}

}  // namespace pathpair
