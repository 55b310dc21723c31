#include <atomic>
#include <string>

#include "vrc4lab/common.hpp"
#include "vrc4lab/kernels.hpp"

namespace vrc4lab::kernels {

namespace detail {
#if !VRC4LAB_HAVE_SSE2
const KernelTable* sse2_table() noexcept { return nullptr; }
#endif
#if !VRC4LAB_HAVE_AVX2
const KernelTable* avx2_table() noexcept { return nullptr; }
#endif
#if !VRC4LAB_HAVE_NEON
const KernelTable* neon_table() noexcept { return nullptr; }
#endif
}  // namespace detail

namespace {

bool cpu_has(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Sse2:
#if VRC4LAB_HAVE_SSE2
            return __builtin_cpu_supports("sse2");
#else
            return false;
#endif
        case Isa::Avx2:
#if VRC4LAB_HAVE_AVX2
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::Neon:
            return VRC4LAB_HAVE_NEON != 0;  // mandatory on AArch64
    }
    return false;
}

const KernelTable* lookup(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return &detail::scalar_table();
        case Isa::Sse2: return detail::sse2_table();
        case Isa::Avx2: return detail::avx2_table();
        case Isa::Neon: return detail::neon_table();
    }
    return nullptr;
}

const KernelTable* best() noexcept {
    for (Isa isa : {Isa::Avx2, Isa::Neon, Isa::Sse2}) {
        if (supported(isa)) return lookup(isa);
    }
    return &detail::scalar_table();
}

std::atomic<const KernelTable*> g_active{nullptr};

void check_sizes(std::size_t a, std::size_t b) {
    if (a != b) throw InvalidArgument("kernel span sizes differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Sse2: return "sse2";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

bool supported(Isa isa) noexcept { return lookup(isa) != nullptr && cpu_has(isa); }

std::vector<Isa> available() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Sse2, Isa::Avx2, Isa::Neon}) {
        if (supported(isa)) out.push_back(isa);
    }
    return out;
}

const KernelTable& table(Isa isa) {
    if (!supported(isa)) throw InvalidArgument("kernel variant not supported here: " + std::string(isa_name(isa)));
    return *lookup(isa);
}

const KernelTable& active() noexcept {
    const KernelTable* t = g_active.load(std::memory_order_acquire);
    if (t == nullptr) {
        t = best();
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

void force(Isa isa) { g_active.store(&table(isa), std::memory_order_release); }

void reset_dispatch() noexcept { g_active.store(best(), std::memory_order_release); }

void xor_bytes(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, std::span<std::uint8_t> out) {
    check_sizes(a.size(), b.size());
    check_sizes(a.size(), out.size());
    active().xor_bytes(a.data(), b.data(), out.data(), out.size());
}

void add_cyclic(std::span<const std::uint8_t> in, std::span<const std::uint8_t> key, std::span<std::uint8_t> out) {
    check_sizes(in.size(), out.size());
    if (key.empty()) throw InvalidArgument("cyclic key must be non-empty");
    active().add_cyclic(in.data(), key.data(), key.size(), 0, out.data(), out.size());
}

void sub_cyclic(std::span<const std::uint8_t> in, std::span<const std::uint8_t> key, std::span<std::uint8_t> out) {
    check_sizes(in.size(), out.size());
    if (key.empty()) throw InvalidArgument("cyclic key must be non-empty");
    active().sub_cyclic(in.data(), key.data(), key.size(), 0, out.data(), out.size());
}

}  // namespace vrc4lab::kernels
