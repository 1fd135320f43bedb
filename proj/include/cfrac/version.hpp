#pragma once

namespace cfrac {

inline constexpr const char* kEngineVersion = "cfrac-1.0.0";

}  // namespace cfrac
