#pragma once

#include <string_view>

namespace ffheat {

inline constexpr std::string_view kToolVersion = "ffheat 0.1.0";

}  // namespace ffheat
