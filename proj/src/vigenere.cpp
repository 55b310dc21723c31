#include "vrc4lab/vigenere.hpp"

#include "vrc4lab/kernels.hpp"

namespace vrc4lab {

namespace {

void require_key(const AlphaText& key) {
    if (key.empty()) throw InvalidArgument("vigenere key must be non-empty");
}

template <int Sign>
AlphaText shift(const AlphaText& text, const AlphaText& key) {
    require_key(key);
    const std::string& in = text.str();
    const std::string& k = key.str();
    std::string out(in.size(), 'A');
    for (std::size_t n = 0; n < in.size(); ++n) {
        const int v = (in[n] - 'A') + Sign * (k[n % k.size()] - 'A');
        out[n] = static_cast<char>('A' + (v + 26) % 26);
    }
    return AlphaText::from_string(out);
}

}  // namespace

AlphaText AlphaText::from_string(std::string_view text) {
    for (std::size_t n = 0; n < text.size(); ++n) {
        if (text[n] < 'A' || text[n] > 'Z') throw InvalidAlphaText(n, static_cast<std::uint8_t>(text[n]));
    }
    return AlphaText(std::string(text));
}

AlphaText AlphaText::from_bytes(ByteView bytes) {
    return from_string(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

AlphaText alpha_encrypt(const AlphaText& plain, const AlphaText& key) { return shift<+1>(plain, key); }
AlphaText alpha_decrypt(const AlphaText& cipher, const AlphaText& key) { return shift<-1>(cipher, key); }

ByteSegmentKey::ByteSegmentKey(ByteView key) : key_(key) {
    if (key_.empty()) throw InvalidArgument("vigenere segment key must be non-empty");
}

void byte_encrypt(ByteView data, const ByteSegmentKey& key, MutableByteView out) {
    kernels::add_cyclic(data, key.bytes(), out);
}

void byte_decrypt(ByteView data, const ByteSegmentKey& key, MutableByteView out) {
    kernels::sub_cyclic(data, key.bytes(), out);
}

Bytes byte_encrypt(ByteView data, const ByteSegmentKey& key) {
    Bytes out(data.size());
    byte_encrypt(data, key, out);
    return out;
}

Bytes byte_decrypt(ByteView data, const ByteSegmentKey& key) {
    Bytes out(data.size());
    byte_decrypt(data, key, out);
    return out;
}

}  // namespace vrc4lab
