#pragma once

namespace ocd {
inline constexpr const char* kVersion = "0.1.0";
}
