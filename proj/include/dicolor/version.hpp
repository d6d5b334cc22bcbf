#pragma once

namespace dicolor {

inline constexpr const char* kVersion = "0.1.0";

} // namespace dicolor
