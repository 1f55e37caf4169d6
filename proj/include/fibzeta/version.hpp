#pragma once

namespace fibzeta {

inline constexpr const char* version = "0.1.0";

} // namespace fibzeta
