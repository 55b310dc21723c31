#include "vrc4lab/keying.hpp"

#include <algorithm>
#include <string>

namespace vrc4lab {

KeyMaterial KeyMaterial::from_bytes(ByteView key) {
    if (key.size() < kMinKeyBytes || key.size() > kMaxKeyBytes)
        throw InvalidKey("key must be 1 to 256 bytes, got " + std::to_string(key.size()));
    KeyMaterial km;
    std::copy(key.begin(), key.end(), km.bytes_.begin());
    km.size_ = key.size();
    return km;
}

KeyMaterial KeyMaterial::from_hex(std::string_view hex) {
    Bytes raw;
    try {
        raw = vrc4lab::from_hex(hex);
    } catch (const InvalidArgument& e) {
        throw InvalidKey(std::string("bad hex key: ") + e.what());
    }
    return from_bytes(raw);
}

ExpandedKey expand_key(const KeyMaterial& key) noexcept {
    ExpandedKey out;
    const std::size_t len = key.size();
    for (std::size_t i = 0; i < ExpandedKey::kSize; ++i) out.t_[i] = key[i % len];
    return out;
}

}  // namespace vrc4lab
