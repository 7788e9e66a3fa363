#pragma once

#include <string_view>

namespace whale {

inline constexpr std::string_view kKernelName = "whale";
inline constexpr std::string_view kKernelVersion = "0.1.0";

}  // namespace whale
