#pragma once

namespace chainsim {

inline constexpr const char* kToolName = "chainsim";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace chainsim
