#pragma once

// One entry point per direction for every registered algorithm. The CLI and
// the throughput benchmark both go through these.

#include "vrc4lab/common.hpp"
#include "vrc4lab/container.hpp"
#include "vrc4lab/keying.hpp"
#include "vrc4lab/vrc4.hpp"

namespace vrc4lab {

/// Payload for `algo`. `split` is only used by VRC4. For alphabetic Vigenere
/// the key and data must be A-Z (InvalidKey / InvalidAlphaText otherwise).
Bytes encrypt_payload(Algorithm algo, const KeyMaterial& key, ByteView plain, SplitIndex split);
/// Throws MalformedCiphertext for an empty VRC4 payload.
Bytes decrypt_payload(Algorithm algo, const KeyMaterial& key, ByteView payload);

}  // namespace vrc4lab
