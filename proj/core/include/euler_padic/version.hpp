#pragma once

namespace euler_padic {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace euler_padic
