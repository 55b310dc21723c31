#pragma once

#include <array>
#include <cstdint>

#include "vrc4lab/common.hpp"
#include "vrc4lab/keying.hpp"

namespace vrc4lab {

/// RC4 generator state: the permutation S and the stream indices i, j.
///
/// A default-constructed state is the identity permutation with i = j = 0,
/// i.e. S before key scheduling. Schedule a fresh state per message; a state
/// is single-owner and must not be shared between threads while in use.
class Rc4State {
public:
    using Permutation = std::array<std::uint8_t, 256>;

    Rc4State() noexcept;

    /// Emits one keystream byte and advances the state.
    std::uint8_t next() noexcept {
        i_ = static_cast<std::uint8_t>(i_ + 1);
        const std::uint8_t si = s_[i_];
        j_ = static_cast<std::uint8_t>(j_ + si);
        const std::uint8_t sj = s_[j_];
        s_[i_] = sj;
        s_[j_] = si;
        return s_[static_cast<std::uint8_t>(si + sj)];
    }

    /// Fills `out` with the next out.size() keystream bytes.
    void keystream(MutableByteView out) noexcept;

    /// out[n] = in[n] ^ k_n. Sizes must match; in and out may alias exactly.
    void apply(ByteView in, MutableByteView out);
    Bytes apply(ByteView in);

    const Permutation& permutation() const noexcept { return s_; }
    std::uint8_t i() const noexcept { return i_; }
    std::uint8_t j() const noexcept { return j_; }

private:
    friend Rc4State key_schedule(const ExpandedKey& t) noexcept;

    Permutation s_;
    std::uint8_t i_ = 0;
    std::uint8_t j_ = 0;
};

/// Initial permutation of S driven by T; returns a state ready for generation.
Rc4State key_schedule(const ExpandedKey& t) noexcept;
inline Rc4State key_schedule(const KeyMaterial& key) noexcept { return key_schedule(expand_key(key)); }

/// One-shot encryption/decryption under a freshly scheduled state.
Bytes rc4_crypt(const KeyMaterial& key, ByteView data);
void rc4_crypt(const KeyMaterial& key, ByteView in, MutableByteView out);

}  // namespace vrc4lab
