#pragma once

#include <string>
#include <string_view>

#include "vrc4lab/common.hpp"

namespace vrc4lab {

/// Uppercase A-Z text. Anything else is rejected, with no case folding or stripping.
class AlphaText {
public:
    /// Throws InvalidAlphaText naming the first offending byte offset.
    static AlphaText from_string(std::string_view text);
    static AlphaText from_bytes(ByteView bytes);

    const std::string& str() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    friend bool operator==(const AlphaText&, const AlphaText&) = default;

private:
    explicit AlphaText(std::string letters) : letters_(std::move(letters)) {}

    std::string letters_;
};

// Tabula recta over A-Z; the key repeats to the length of the text.
// Both throw InvalidArgument on an empty key.
AlphaText alpha_encrypt(const AlphaText& plain, const AlphaText& key);
AlphaText alpha_decrypt(const AlphaText& cipher, const AlphaText& key);

/// Non-empty key for the byte (mod 256) Vigenere used by VRC4 segments.
class ByteSegmentKey {
public:
    /// Throws InvalidArgument when `key` is empty. The view is not copied.
    explicit ByteSegmentKey(ByteView key);

    ByteView bytes() const noexcept { return key_; }
    std::size_t size() const noexcept { return key_.size(); }

private:
    ByteView key_;
};

// out[n] = data[n] +/- key[n mod keylen] (mod 256). in and out may alias.
Bytes byte_encrypt(ByteView data, const ByteSegmentKey& key);
Bytes byte_decrypt(ByteView data, const ByteSegmentKey& key);
void byte_encrypt(ByteView data, const ByteSegmentKey& key, MutableByteView out);
void byte_decrypt(ByteView data, const ByteSegmentKey& key, MutableByteView out);

}  // namespace vrc4lab
