#pragma once

namespace rmcount {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rmcount
