#pragma once

// Data-parallel byte kernels behind the stream XOR and the mod-256 Vigenere
// layer. Every ISA variant must be bit-identical to the scalar reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace vrc4lab::kernels {

enum class Isa { Scalar, Sse2, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

using XorFn = void (*)(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out, std::size_t n);
// out[n] = in[n] +/- key[(phase + n) % key_len]; key_len >= 1, phase < key_len.
using CyclicFn = void (*)(const std::uint8_t* in, const std::uint8_t* key, std::size_t key_len,
                          std::size_t phase, std::uint8_t* out, std::size_t n);

struct KernelTable {
    Isa isa;
    XorFn xor_bytes;
    CyclicFn add_cyclic;
    CyclicFn sub_cyclic;
};

/// True when the variant is compiled in and the running CPU supports it.
bool supported(Isa isa) noexcept;
std::vector<Isa> available();

/// Throws InvalidArgument when the variant is unsupported.
const KernelTable& table(Isa isa);

/// Best supported variant, chosen once on first use.
const KernelTable& active() noexcept;

/// Overrides the dispatch choice (tests and benchmarks). Throws if unsupported.
void force(Isa isa);
void reset_dispatch() noexcept;

// Span wrappers over the active table. Sizes must match; in == out is allowed.
void xor_bytes(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
               std::span<std::uint8_t> out);
void add_cyclic(std::span<const std::uint8_t> in, std::span<const std::uint8_t> key,
                std::span<std::uint8_t> out);
void sub_cyclic(std::span<const std::uint8_t> in, std::span<const std::uint8_t> key,
                std::span<std::uint8_t> out);

namespace detail {
const KernelTable& scalar_table() noexcept;
const KernelTable* sse2_table() noexcept;
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;
}  // namespace detail

}  // namespace vrc4lab::kernels
