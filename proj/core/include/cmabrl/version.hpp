#pragma once

#include <string_view>

namespace cmabrl {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace cmabrl
