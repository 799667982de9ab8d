#pragma once

namespace rentsim {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace rentsim
