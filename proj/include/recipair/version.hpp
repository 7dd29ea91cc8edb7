#pragma once

namespace recipair {

inline constexpr char kVersion[] = "0.1.0";

}  // namespace recipair
