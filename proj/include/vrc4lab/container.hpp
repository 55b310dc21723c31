#pragma once

// File container:
//
//   offset  size  field
//   0       4     magic "VRC4" (56 52 43 34)
//   4       1     version (01)
//   5       1     algorithm id
//   6       8     payload length, unsigned big-endian
//   14      n     payload

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "vrc4lab/common.hpp"

namespace vrc4lab {

enum class Algorithm : std::uint8_t {
    Rc4 = 0x01,
    Vrc4 = 0x02,
    VigenereAlpha = 0x03,
};

std::optional<Algorithm> algorithm_from_id(std::uint8_t id) noexcept;
/// Accepts the CLI spellings "rc4", "vrc4", "vigenere".
std::optional<Algorithm> algorithm_from_name(std::string_view name) noexcept;
std::string_view algorithm_name(Algorithm algo) noexcept;

inline constexpr std::array<std::uint8_t, 4> kFrameMagic{0x56, 0x52, 0x43, 0x34};
inline constexpr std::uint8_t kFrameVersion = 0x01;
inline constexpr std::size_t kFrameHeaderSize = 14;

enum class FrameErrorKind {
    BadMagic,
    UnsupportedVersion,
    UnknownAlgorithm,
    Truncated,
    TrailingBytes,
};

std::string_view to_string(FrameErrorKind kind) noexcept;

class FrameError : public Error {
public:
    FrameError(FrameErrorKind kind, const std::string& detail);
    FrameErrorKind kind() const noexcept { return kind_; }

private:
    FrameErrorKind kind_;
};

struct Frame {
    Algorithm algo;
    Bytes payload;

    friend bool operator==(const Frame&, const Frame&) = default;
};

Bytes write_frame(Algorithm algo, ByteView payload);
/// Raw-id form; throws FrameError(UnknownAlgorithm) for unregistered ids.
Bytes write_frame(std::uint8_t algo_id, ByteView payload);

/// Validates length, magic, version, algorithm and payload length, in that order.
Frame read_frame(ByteView data);

}  // namespace vrc4lab
