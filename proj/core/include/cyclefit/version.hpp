#pragma once

namespace cyclefit {

inline constexpr const char* kToolName = "cyclefit";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace cyclefit
