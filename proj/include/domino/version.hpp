#pragma once

namespace domino {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace domino
