#pragma once

namespace hermanlab {

inline constexpr const char* kToolVersion = "hermanlab 0.1.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace hermanlab
