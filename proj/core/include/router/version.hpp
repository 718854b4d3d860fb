#pragma once

namespace router {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace router
