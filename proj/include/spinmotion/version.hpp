#pragma once

namespace spinmotion {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spinmotion
