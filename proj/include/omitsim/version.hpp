#pragma once

namespace omitsim {
inline constexpr const char* version = "0.1.0";
}
