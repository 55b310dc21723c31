#include "vrc4lab/suite.hpp"

#include "vrc4lab/rc4.hpp"
#include "vrc4lab/vigenere.hpp"

namespace vrc4lab {

namespace {

AlphaText alpha_key(const KeyMaterial& key) {
    try {
        return AlphaText::from_bytes(key.bytes());
    } catch (const InvalidAlphaText& e) {
        throw InvalidKey(std::string("vigenere key: ") + e.what());
    }
}

Bytes to_bytes(const AlphaText& text) { return Bytes(text.str().begin(), text.str().end()); }

}  // namespace

Bytes encrypt_payload(Algorithm algo, const KeyMaterial& key, ByteView plain, SplitIndex split) {
    switch (algo) {
        case Algorithm::Rc4:
            return rc4_crypt(key, plain);
        case Algorithm::Vrc4: {
            Bytes out(plain.size() + 1);
            vrc4_encrypt_body(plain, key, split, MutableByteView(out).first(plain.size()));
            out.back() = split.value();
            return out;
        }
        case Algorithm::VigenereAlpha: {
            const AlphaText k = alpha_key(key);
            return to_bytes(alpha_encrypt(AlphaText::from_bytes(plain), k));
        }
    }
    throw InvalidArgument("unregistered algorithm");
}

Bytes decrypt_payload(Algorithm algo, const KeyMaterial& key, ByteView payload) {
    switch (algo) {
        case Algorithm::Rc4:
            return rc4_crypt(key, payload);
        case Algorithm::Vrc4:
            return vrc4_decrypt(payload, key);
        case Algorithm::VigenereAlpha: {
            const AlphaText k = alpha_key(key);
            return to_bytes(alpha_decrypt(AlphaText::from_bytes(payload), k));
        }
    }
    throw InvalidArgument("unregistered algorithm");
}

}  // namespace vrc4lab
