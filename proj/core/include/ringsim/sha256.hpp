#pragma once

#include <cstdint>
#include <string>

namespace ringsim {

/// SHA-256 digest of a byte string, lowercase hex.
std::string sha256_hex(const std::string& data);

}  // namespace ringsim
