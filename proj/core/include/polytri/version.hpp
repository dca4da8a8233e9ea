#pragma once

namespace polytri {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace polytri
