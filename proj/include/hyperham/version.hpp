#pragma once

namespace hyperham {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hyperham
