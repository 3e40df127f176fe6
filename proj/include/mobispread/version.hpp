#pragma once

namespace mobispread {

inline constexpr const char* version = "0.1.0";

}  // namespace mobispread
