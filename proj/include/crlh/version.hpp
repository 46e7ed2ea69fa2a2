#pragma once

namespace crlh {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace crlh
