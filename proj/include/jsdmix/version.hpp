#pragma once

namespace jsdmix {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace jsdmix
