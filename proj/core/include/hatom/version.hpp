#pragma once

namespace hatom {
inline constexpr const char* kVersion = "0.1.0";
}
