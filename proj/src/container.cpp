#include "vrc4lab/container.hpp"

#include <algorithm>
#include <string>

namespace vrc4lab {

std::optional<Algorithm> algorithm_from_id(std::uint8_t id) noexcept {
    switch (id) {
        case 0x01: return Algorithm::Rc4;
        case 0x02: return Algorithm::Vrc4;
        case 0x03: return Algorithm::VigenereAlpha;
        default: return std::nullopt;
    }
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) noexcept {
    if (name == "rc4") return Algorithm::Rc4;
    if (name == "vrc4") return Algorithm::Vrc4;
    if (name == "vigenere") return Algorithm::VigenereAlpha;
    return std::nullopt;
}

std::string_view algorithm_name(Algorithm algo) noexcept {
    switch (algo) {
        case Algorithm::Rc4: return "rc4";
        case Algorithm::Vrc4: return "vrc4";
        case Algorithm::VigenereAlpha: return "vigenere";
    }
    return "unknown";
}

std::string_view to_string(FrameErrorKind kind) noexcept {
    switch (kind) {
        case FrameErrorKind::BadMagic: return "bad magic";
        case FrameErrorKind::UnsupportedVersion: return "unsupported version";
        case FrameErrorKind::UnknownAlgorithm: return "unknown algorithm";
        case FrameErrorKind::Truncated: return "truncated";
        case FrameErrorKind::TrailingBytes: return "trailing bytes";
    }
    return "unknown frame error";
}

FrameError::FrameError(FrameErrorKind kind, const std::string& detail)
    : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

Bytes write_frame(Algorithm algo, ByteView payload) {
    Bytes out(kFrameHeaderSize + payload.size());
    std::copy(kFrameMagic.begin(), kFrameMagic.end(), out.begin());
    out[4] = kFrameVersion;
    out[5] = static_cast<std::uint8_t>(algo);
    const std::uint64_t len = payload.size();
    for (std::size_t n = 0; n < 8; ++n) out[6 + n] = static_cast<std::uint8_t>(len >> (56 - 8 * n));
    std::copy(payload.begin(), payload.end(), out.begin() + kFrameHeaderSize);
    return out;
}

Bytes write_frame(std::uint8_t algo_id, ByteView payload) {
    const auto algo = algorithm_from_id(algo_id);
    if (!algo) throw FrameError(FrameErrorKind::UnknownAlgorithm, "id " + std::to_string(algo_id) + " is not registered");
    return write_frame(*algo, payload);
}

Frame read_frame(ByteView data) {
    if (data.size() < kFrameHeaderSize)
        throw FrameError(FrameErrorKind::Truncated, "header needs 14 bytes, got " + std::to_string(data.size()));
    if (!std::equal(kFrameMagic.begin(), kFrameMagic.end(), data.begin()))
        throw FrameError(FrameErrorKind::BadMagic, "expected \"VRC4\"");
    if (data[4] != kFrameVersion)
        throw FrameError(FrameErrorKind::UnsupportedVersion, "version " + std::to_string(data[4]));
    const auto algo = algorithm_from_id(data[5]);
    if (!algo) throw FrameError(FrameErrorKind::UnknownAlgorithm, "id " + std::to_string(data[5]));

    std::uint64_t len = 0;
    for (std::size_t n = 6; n < kFrameHeaderSize; ++n) len = len << 8 | data[n];
    const std::uint64_t available = data.size() - kFrameHeaderSize;
    if (len > available)
        throw FrameError(FrameErrorKind::Truncated, "payload declares " + std::to_string(len) + " bytes, " +
                                                        std::to_string(available) + " present");
    if (len < available)
        throw FrameError(FrameErrorKind::TrailingBytes,
                         std::to_string(available - len) + " bytes after the declared payload");

    return Frame{*algo, Bytes(data.begin() + kFrameHeaderSize, data.end())};
}

}  // namespace vrc4lab
