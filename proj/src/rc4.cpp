#include "vrc4lab/rc4.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "vrc4lab/kernels.hpp"

namespace vrc4lab {

namespace {
constexpr std::size_t kBlock = 4096;
}

Rc4State::Rc4State() noexcept { std::iota(s_.begin(), s_.end(), std::uint8_t{0}); }

Rc4State key_schedule(const ExpandedKey& t) noexcept {
    Rc4State st;
    std::uint8_t j = 0;
    for (std::size_t i = 0; i < 256; ++i) {
        j = static_cast<std::uint8_t>(j + st.s_[i] + t[i]);
        std::swap(st.s_[i], st.s_[j]);
    }
    return st;
}

void Rc4State::keystream(MutableByteView out) noexcept {
    for (auto& b : out) b = next();
}

void Rc4State::apply(ByteView in, MutableByteView out) {
    if (in.size() != out.size())
        throw InvalidArgument("rc4: output size " + std::to_string(out.size()) + " != input size " +
                              std::to_string(in.size()));
    std::array<std::uint8_t, kBlock> ks;
    const auto& kt = kernels::active();
    for (std::size_t off = 0; off < in.size(); off += kBlock) {
        const std::size_t n = std::min(kBlock, in.size() - off);
        keystream(MutableByteView(ks.data(), n));
        kt.xor_bytes(in.data() + off, ks.data(), out.data() + off, n);
    }
}

Bytes Rc4State::apply(ByteView in) {
    Bytes out(in.size());
    apply(in, out);
    return out;
}

Bytes rc4_crypt(const KeyMaterial& key, ByteView data) {
    Rc4State st = key_schedule(key);
    return st.apply(data);
}

void rc4_crypt(const KeyMaterial& key, ByteView in, MutableByteView out) {
    Rc4State st = key_schedule(key);
    st.apply(in, out);
}

}  // namespace vrc4lab
