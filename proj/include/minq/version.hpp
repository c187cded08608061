#pragma once

namespace minq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace minq
