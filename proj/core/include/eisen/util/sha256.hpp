#pragma once

#include <string>

namespace eisen {

// Lowercase hex SHA-256 of the bytes of s.
std::string sha256_hex(const std::string& s);

}  // namespace eisen
