#pragma once

namespace layersum {

inline constexpr const char* kVersion = "0.1.0";

}
