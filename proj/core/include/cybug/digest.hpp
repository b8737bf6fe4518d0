#pragma once

#include <string>
#include <string_view>

namespace cybug::sim {

// SHA-256 of the given bytes, lowercase hex.
std::string sha256_hex(std::string_view bytes);

}  // namespace cybug::sim
