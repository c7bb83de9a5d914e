#pragma once

namespace nongauss {

inline constexpr const char* kToolName = "nongauss";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace nongauss
