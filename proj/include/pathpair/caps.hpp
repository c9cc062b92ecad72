#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathpair {

/// Raised by exhaustive operations asked to run above their desk-scale size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Name of the environment variable that raises every size cap.
inline constexpr const char* kCapOverrideEnv = "PATHPAIR_CAP_OVERRIDE";

/// max(default_cap, $PATHPAIR_CAP_OVERRIDE) when the variable holds a positive integer.
std::size_t effective_cap(std::size_t default_cap);

/// Throws CapExceeded when size > effective_cap(default_cap).
void enforce_cap(const std::string& what, std::size_t size, std::size_t default_cap);

}  // namespace pathpair
