#include "vrc4lab/common.hpp"

namespace vrc4lab {

namespace {

std::string describe_alpha_error(std::size_t offset, std::uint8_t value) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string msg = "invalid character 0x";
    msg += kDigits[value >> 4];
    msg += kDigits[value & 0x0f];
    msg += " at byte offset " + std::to_string(offset) + " (only A-Z allowed)";
    return msg;
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

InvalidAlphaText::InvalidAlphaText(std::size_t offset, std::uint8_t value)
    : Error(describe_alpha_error(offset, value)), offset_(offset), value_(value) {}

std::string to_hex(ByteView data) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out += kDigits[b >> 4];
        out += kDigits[b & 0x0f];
    }
    return out;
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw InvalidArgument("hex string has odd length");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t n = 0; n < hex.size(); n += 2) {
        const int hi = hex_value(hex[n]);
        const int lo = hex_value(hex[n + 1]);
        if (hi < 0 || lo < 0)
            throw InvalidArgument("invalid hex digit at offset " + std::to_string(hi < 0 ? n : n + 1));
        out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return out;
}

}  // namespace vrc4lab
