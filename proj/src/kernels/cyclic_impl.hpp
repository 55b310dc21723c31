#pragma once

// Shared loop shapes for the vector variants. Each ISA translation unit
// instantiates these with its own register wrapper, compiled under that
// ISA's flags.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace vrc4lab::kernels::detail {

// Key repeated out to key_len + width bytes so that a full vector of key
// bytes starting at any phase is a single unaligned load.
class KeyWindow {
public:
    KeyWindow(const std::uint8_t* key, std::size_t key_len, std::size_t width) {
        const std::size_t len = key_len + width;
        std::uint8_t* dst = inline_.data();
        if (len > inline_.size()) {
            heap_.resize(len);
            dst = heap_.data();
        }
        for (std::size_t m = 0; m < len; ++m) dst[m] = key[m % key_len];
        data_ = dst;
    }
    KeyWindow(const KeyWindow&) = delete;
    KeyWindow& operator=(const KeyWindow&) = delete;

    const std::uint8_t* data() const noexcept { return data_; }

private:
    std::array<std::uint8_t, 256 + 64> inline_;
    std::vector<std::uint8_t> heap_;
    const std::uint8_t* data_ = nullptr;
};

template <class V>
void xor_vec(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 * V::kWidth <= n; i += 4 * V::kWidth) {
        for (std::size_t u = 0; u < 4; ++u) {
            const std::size_t o = i + u * V::kWidth;
            V::store(out + o, V::bxor(V::load(a + o), V::load(b + o)));
        }
    }
    for (; i + V::kWidth <= n; i += V::kWidth) V::store(out + i, V::bxor(V::load(a + i), V::load(b + i)));
    for (; i < n; ++i) out[i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
}

template <class V, bool Add>
void cyclic_vec(const std::uint8_t* in, const std::uint8_t* key, std::size_t key_len, std::size_t phase,
                std::uint8_t* out, std::size_t n) {
    std::size_t i = 0;
    std::size_t k = phase;
    if (n >= V::kWidth) {
        const KeyWindow window(key, key_len, V::kWidth);
        const std::size_t step = V::kWidth % key_len;
        for (; i + V::kWidth <= n; i += V::kWidth) {
            const auto x = V::load(in + i);
            const auto kv = V::load(window.data() + k);
            V::store(out + i, Add ? V::add(x, kv) : V::sub(x, kv));
            k += step;
            if (k >= key_len) k -= key_len;
        }
    }
    for (; i < n; ++i) {
        out[i] = static_cast<std::uint8_t>(Add ? in[i] + key[k] : in[i] - key[k]);
        if (++k == key_len) k = 0;
    }
}

template <class V>
constexpr KernelTable make_table(Isa isa) {
    return KernelTable{isa, xor_vec<V>, cyclic_vec<V, true>, cyclic_vec<V, false>};
}

}  // namespace vrc4lab::kernels::detail
