#pragma once

#include <string>
#include <vector>

#include "vrc4lab/common.hpp"
#include "vrc4lab/container.hpp"

namespace vrc4lab {

enum class Direction { Encrypt, Decrypt };

struct KnownAnswer {
    std::string name;
    Algorithm algo;
    Direction direction;
    Bytes key;
    Bytes input;
    Bytes expected;
    std::uint8_t split = 0;  // VRC4 only
};

struct KnownAnswerResult {
    std::string name;
    Bytes expected;
    Bytes actual;
    bool ok;
    std::string error;  // set when the computation threw
};

/// The Vigenere worked example (both directions), four RC4 vectors and the
/// VRC4 "Key"/"Plaintext" vector at J = 4.
std::vector<KnownAnswer> builtin_vectors();

std::vector<KnownAnswerResult> run_vectors(const std::vector<KnownAnswer>& vectors);

/// Letters for Vigenere vectors, hex otherwise.
std::string display(const KnownAnswer& v, ByteView bytes);

}  // namespace vrc4lab
