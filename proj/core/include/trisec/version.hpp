#pragma once

namespace trisec {

inline constexpr const char* kVersion = "0.1.0";

}
