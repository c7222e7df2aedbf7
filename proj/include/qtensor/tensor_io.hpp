#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtensor/transform.hpp"

namespace qtensor {

/// Binary tensor format (bit-exact round trip):
///   magic "QT3\0", then m, n, p as unsigned 64-bit little-endian, then
///   m*n*p entries, slice-major (third index slowest), row-major within a
///   slice, each entry four little-endian IEEE-754 doubles (w, x, y, z).
inline constexpr std::array<std::uint8_t, 4> kTensorMagic = {0x51, 0x54, 0x33, 0x00};

enum class TensorIoErrorKind { BadMagic, Truncated, DimOverflow };

class TensorIoError : public std::runtime_error {
public:
    TensorIoError(TensorIoErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    TensorIoErrorKind kind() const { return kind_; }

private:
    TensorIoErrorKind kind_;
};

std::vector<std::uint8_t> serialize_tensor(const CdTensor3& t);
CdTensor3 parse_tensor(std::span<const std::uint8_t> bytes);

void write_tensor(const std::filesystem::path& path, const CdTensor3& t);
CdTensor3 read_tensor(const std::filesystem::path& path);

} // namespace qtensor
