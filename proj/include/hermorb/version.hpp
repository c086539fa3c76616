#pragma once

namespace hermorb {
inline constexpr const char* kVersion = "0.1.0";
}
