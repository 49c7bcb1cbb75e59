#pragma once

namespace relaysec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace relaysec
