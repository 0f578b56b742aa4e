#pragma once

namespace hzoo {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolVersion = "hzoo 0.1.0";

}  // namespace hzoo
