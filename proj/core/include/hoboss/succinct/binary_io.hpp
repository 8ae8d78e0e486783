#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "hoboss/error.hpp"

// Little-endian integer encoding for the index container. Byte order is fixed
// independently of the host.
namespace hoboss::io {

template <typename UInt>
void write_le(std::ostream &out, UInt value) {
    std::array<char, sizeof(UInt)> buf{};
    for (std::size_t i = 0; i < sizeof(UInt); ++i)
        buf[i] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xFF);
    out.write(buf.data(), buf.size());
}

template <typename UInt>
UInt read_le(std::istream &in) {
    std::array<char, sizeof(UInt)> buf{};
    if (!in.read(buf.data(), buf.size()))
        throw FormatError("index container truncated");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < sizeof(UInt); ++i)
        value |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
    return static_cast<UInt>(value);
}

inline void write_tag(std::ostream &out, std::string_view tag) {
    out.write(tag.data(), static_cast<std::streamsize>(tag.size()));
}

inline void expect_tag(std::istream &in, std::string_view tag) {
    std::string got(tag.size(), '\0');
    if (!in.read(got.data(), static_cast<std::streamsize>(got.size())))
        throw FormatError("index container truncated while reading section tag");
    if (got != tag)
        throw FormatError("expected section '" + std::string(tag) + "', found '" + got + "'");
}

}  // namespace hoboss::io
