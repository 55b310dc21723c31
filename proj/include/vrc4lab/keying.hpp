#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "vrc4lab/common.hpp"

namespace vrc4lab {

inline constexpr std::size_t kMinKeyBytes = 1;
inline constexpr std::size_t kMaxKeyBytes = 256;

/// User key bytes, 1..256 long. Stored inline so keys are cheap to copy.
class KeyMaterial {
public:
    /// Throws InvalidKey unless 1 <= key.size() <= 256.
    static KeyMaterial from_bytes(ByteView key);
    /// Passphrase mode: the text's bytes are the key, verbatim.
    static KeyMaterial from_text(std::string_view text) { return from_bytes(as_bytes(text)); }
    static KeyMaterial from_hex(std::string_view hex);

    ByteView bytes() const noexcept { return {bytes_.data(), size_}; }
    std::size_t size() const noexcept { return size_; }
    std::uint8_t operator[](std::size_t n) const noexcept { return bytes_[n]; }

    friend bool operator==(const KeyMaterial& a, const KeyMaterial& b) noexcept {
        return a.size_ == b.size_ && a.bytes_ == b.bytes_;
    }

private:
    KeyMaterial() = default;

    std::array<std::uint8_t, kMaxKeyBytes> bytes_{};
    std::size_t size_ = 0;
};

/// The 256-byte vector T: the key repeated cyclically.
class ExpandedKey {
public:
    static constexpr std::size_t kSize = 256;

    ByteView bytes() const noexcept { return t_; }
    std::uint8_t operator[](std::size_t n) const noexcept { return t_[n]; }
    /// t[first..=last]; requires first <= last < 256.
    ByteView slice(std::size_t first, std::size_t last) const noexcept {
        return ByteView(t_).subspan(first, last - first + 1);
    }

private:
    friend ExpandedKey expand_key(const KeyMaterial& key) noexcept;

    std::array<std::uint8_t, kSize> t_{};
};

ExpandedKey expand_key(const KeyMaterial& key) noexcept;

}  // namespace vrc4lab
