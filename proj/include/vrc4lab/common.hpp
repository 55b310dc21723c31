#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vrc4lab {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;
using MutableByteView = std::span<std::uint8_t>;

inline ByteView as_bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidKey : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Input to the alphabetic Vigenere cipher contained something other than A-Z.
class InvalidAlphaText : public Error {
public:
    InvalidAlphaText(std::size_t offset, std::uint8_t value);
    std::size_t offset() const noexcept { return offset_; }
    std::uint8_t value() const noexcept { return value_; }

private:
    std::size_t offset_;
    std::uint8_t value_;
};

/// Serialized VRC4 ciphertext could not be parsed.
class MalformedCiphertext : public Error {
public:
    using Error::Error;
};

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);

}  // namespace vrc4lab
