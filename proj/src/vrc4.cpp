#include "vrc4lab/vrc4.hpp"

#include <algorithm>
#include <string>

#include "vrc4lab/rc4.hpp"
#include "vrc4lab/vigenere.hpp"

namespace vrc4lab {

namespace {

void check_sizes(std::size_t in, std::size_t out) {
    if (in != out)
        throw InvalidArgument("vrc4: output size " + std::to_string(out) + " != input size " + std::to_string(in));
}

template <class Fn>
void for_each_segment(const ExpandedKey& t, SplitIndex split, ByteView in, MutableByteView out, Fn&& fn) {
    const SegmentPlan plan = plan_segments(in.size(), split);
    const ByteSegmentKey key_a(t.slice(plan.key_a_first, plan.key_a_last));
    const ByteSegmentKey key_b(t.slice(plan.key_b_first, plan.key_b_last));
    fn(in.first(plan.a_end), key_a, out.first(plan.a_end));
    fn(in.subspan(plan.a_end), key_b, out.subspan(plan.a_end));
}

}  // namespace

SplitIndex SplitIndex::from_int(long long j) {
    if (j < 0 || j > 255) throw InvalidArgument("split index must be in 0..255, got " + std::to_string(j));
    return SplitIndex(static_cast<std::uint8_t>(j));
}

SegmentPlan plan_segments(std::size_t length, SplitIndex split) noexcept {
    const std::size_t j = split.value();
    SegmentPlan plan{};
    plan.length = length;
    plan.a_end = std::min(j + 1, length);
    plan.key_a_first = 0;
    plan.key_a_last = j;
    if (j == 255) {
        plan.key_b_first = 0;
        plan.key_b_last = 255;
    } else {
        plan.key_b_first = j + 1;
        plan.key_b_last = 255;
    }
    return plan;
}

Bytes Vrc4Ciphertext::serialize() const {
    Bytes out;
    out.reserve(body.size() + 1);
    out.insert(out.end(), body.begin(), body.end());
    out.push_back(split.value());
    return out;
}

Vrc4Ciphertext Vrc4Ciphertext::parse(ByteView serialized) {
    if (serialized.empty()) throw MalformedCiphertext("vrc4 ciphertext is empty: missing split byte");
    Vrc4Ciphertext c;
    c.body.assign(serialized.begin(), serialized.end() - 1);
    c.split = SplitIndex(serialized.back());
    return c;
}

void vrc4_encrypt_body(ByteView plain, const KeyMaterial& key, SplitIndex split, MutableByteView body) {
    check_sizes(plain.size(), body.size());
    const ExpandedKey t = expand_key(key);
    Rc4State rc4 = key_schedule(t);
    rc4.apply(plain, body);
    for_each_segment(t, split, body, body, [](ByteView in, const ByteSegmentKey& k, MutableByteView out) {
        byte_encrypt(in, k, out);
    });
}

void vrc4_decrypt_body(ByteView body, const KeyMaterial& key, SplitIndex split, MutableByteView plain) {
    check_sizes(body.size(), plain.size());
    const ExpandedKey t = expand_key(key);
    for_each_segment(t, split, body, plain, [](ByteView in, const ByteSegmentKey& k, MutableByteView out) {
        byte_decrypt(in, k, out);
    });
    Rc4State rc4 = key_schedule(t);
    rc4.apply(plain, plain);
}

Vrc4Ciphertext vrc4_encrypt(ByteView plain, const KeyMaterial& key, SplitIndex split) {
    Vrc4Ciphertext c;
    c.body.resize(plain.size());
    c.split = split;
    vrc4_encrypt_body(plain, key, split, c.body);
    return c;
}

Bytes vrc4_decrypt(const Vrc4Ciphertext& cipher, const KeyMaterial& key) {
    Bytes plain(cipher.body.size());
    vrc4_decrypt_body(cipher.body, key, cipher.split, plain);
    return plain;
}

Bytes vrc4_decrypt(ByteView serialized, const KeyMaterial& key) {
    if (serialized.empty()) throw MalformedCiphertext("vrc4 ciphertext is empty: missing split byte");
    Bytes plain(serialized.size() - 1);
    vrc4_decrypt_body(serialized.first(plain.size()), key, SplitIndex(serialized.back()), plain);
    return plain;
}

}  // namespace vrc4lab
