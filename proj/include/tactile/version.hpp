#pragma once

namespace tactile {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tactile
