#include "vrc4lab/vectors.hpp"

#include "vrc4lab/suite.hpp"

namespace vrc4lab {

namespace {

Bytes text(std::string_view s) { return Bytes(s.begin(), s.end()); }

}  // namespace

std::vector<KnownAnswer> builtin_vectors() {
    using enum Algorithm;
    using enum Direction;
    return {
        {"vigenere-encrypt ATTACKATDAWN/LEMON", VigenereAlpha, Encrypt, text("LEMON"), text("ATTACKATDAWN"),
         text("LXFOPVEFRNHR")},
        {"vigenere-decrypt LXFOPVEFRNHR/LEMON", VigenereAlpha, Decrypt, text("LEMON"), text("LXFOPVEFRNHR"),
         text("ATTACKATDAWN")},
        {"rc4-keystream Key", Rc4, Encrypt, text("Key"), Bytes(9, 0x00), from_hex("EB9F7781B734CA72A7")},
        {"rc4 Key/Plaintext", Rc4, Encrypt, text("Key"), text("Plaintext"), from_hex("BBF316E8D940AF0AD3")},
        {"rc4 Wiki/pedia", Rc4, Encrypt, text("Wiki"), text("pedia"), from_hex("1021BF0420")},
        {"rc4 Secret/Attack at dawn", Rc4, Encrypt, text("Secret"), text("Attack at dawn"),
         from_hex("45A01F645FC35B383552544B9BF5")},
        {"vrc4-encrypt Key/Plaintext J=4", Vrc4, Encrypt, text("Key"), text("Plaintext"),
         from_hex("06588F333EB9FA6F4C04"), 4},
        {"vrc4-decrypt Key/Plaintext J=4", Vrc4, Decrypt, text("Key"), from_hex("06588F333EB9FA6F4C04"),
         text("Plaintext")},
    };
}

std::vector<KnownAnswerResult> run_vectors(const std::vector<KnownAnswer>& vectors) {
    std::vector<KnownAnswerResult> results;
    results.reserve(vectors.size());
    for (const auto& v : vectors) {
        KnownAnswerResult r{v.name, v.expected, {}, false, {}};
        try {
            const auto key = KeyMaterial::from_bytes(v.key);
            r.actual = v.direction == Direction::Encrypt
                           ? encrypt_payload(v.algo, key, v.input, SplitIndex(v.split))
                           : decrypt_payload(v.algo, key, v.input);
            r.ok = r.actual == v.expected;
        } catch (const Error& e) {
            r.error = e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::string display(const KnownAnswer& v, ByteView bytes) {
    if (v.algo == Algorithm::VigenereAlpha) return std::string(bytes.begin(), bytes.end());
    return to_hex(bytes);
}

}  // namespace vrc4lab
