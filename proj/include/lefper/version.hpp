#pragma once

namespace lefper {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lefper
