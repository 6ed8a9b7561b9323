#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cugan {

std::string base64_encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> base64_decode(const std::string& text);

/// Doubles as packed little-endian 64-bit floats, base64 encoded.
std::string encode_f64le(std::span<const double> values);
std::vector<double> decode_f64le(const std::string& text);

} // namespace cugan
