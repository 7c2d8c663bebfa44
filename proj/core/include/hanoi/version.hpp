#pragma once

namespace hanoi {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hanoi
