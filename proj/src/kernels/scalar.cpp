#include "vrc4lab/kernels.hpp"

namespace vrc4lab::kernels::detail {

namespace {

void xor_scalar(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
}

void add_cyclic_scalar(const std::uint8_t* in, const std::uint8_t* key, std::size_t key_len,
                       std::size_t phase, std::uint8_t* out, std::size_t n) {
    std::size_t k = phase;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = static_cast<std::uint8_t>(in[i] + key[k]);
        if (++k == key_len) k = 0;
    }
}

void sub_cyclic_scalar(const std::uint8_t* in, const std::uint8_t* key, std::size_t key_len,
                       std::size_t phase, std::uint8_t* out, std::size_t n) {
    std::size_t k = phase;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = static_cast<std::uint8_t>(in[i] - key[k]);
        if (++k == key_len) k = 0;
    }
}

constexpr KernelTable kScalar{Isa::Scalar, xor_scalar, add_cyclic_scalar, sub_cyclic_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace vrc4lab::kernels::detail
