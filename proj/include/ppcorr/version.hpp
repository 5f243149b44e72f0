#pragma once

namespace ppcorr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ppcorr
