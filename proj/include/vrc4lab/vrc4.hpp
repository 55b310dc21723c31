#pragma once

#include <cstdint>

#include "vrc4lab/common.hpp"
#include "vrc4lab/keying.hpp"

namespace vrc4lab {

/// The random split position J, 0..255. Serialized as a single byte.
class SplitIndex {
public:
    constexpr explicit SplitIndex(std::uint8_t j) noexcept : j_(j) {}
    /// Throws InvalidArgument outside 0..255.
    static SplitIndex from_int(long long j);

    constexpr std::uint8_t value() const noexcept { return j_; }
    friend constexpr bool operator==(SplitIndex, SplitIndex) = default;

private:
    std::uint8_t j_;
};

/// Where a body of `length` bytes is cut for split J, and which slices of T
/// key each side.
///
/// Segment A is indices [0, a_end), i.e. 0..=J clipped to the body. Segment B
/// is [a_end, length). A is keyed by T[0..=J]. B is keyed by T[J+1..=255],
/// except for J = 255 where that slice is empty and B uses all of T.
struct SegmentPlan {
    std::size_t a_end;
    std::size_t length;
    std::size_t key_a_first, key_a_last;
    std::size_t key_b_first, key_b_last;
};

SegmentPlan plan_segments(std::size_t length, SplitIndex split) noexcept;

/// Body C1 || C2 plus the split. Serialized form is body || J.
struct Vrc4Ciphertext {
    Bytes body;
    SplitIndex split{0};

    Bytes serialize() const;
    /// Throws MalformedCiphertext on empty input (no J byte).
    static Vrc4Ciphertext parse(ByteView serialized);
};

/// RC4-encrypt, then byte-Vigenere each side of the split with its slice of T.
Vrc4Ciphertext vrc4_encrypt(ByteView plain, const KeyMaterial& key, SplitIndex split);
/// Allocation-free form: body.size() must equal plain.size().
void vrc4_encrypt_body(ByteView plain, const KeyMaterial& key, SplitIndex split, MutableByteView body);

/// Inverse of vrc4_encrypt. A wrong key yields garbage, never an error.
Bytes vrc4_decrypt(const Vrc4Ciphertext& cipher, const KeyMaterial& key);
Bytes vrc4_decrypt(ByteView serialized, const KeyMaterial& key);
void vrc4_decrypt_body(ByteView body, const KeyMaterial& key, SplitIndex split, MutableByteView plain);

}  // namespace vrc4lab
